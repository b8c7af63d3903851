#!/usr/bin/env python3
"""Regenerate src/fixtures.cpp from the fixtures/ directory."""

import pathlib

ORDER = [
    "uni-mem",
    "first-one",
    "one-count",
    "zero-run",
    "charge",
    "alternation",
    "imitation",
    "echo",
    "shuttle",
    "battery",
    "shuttle-energy",
]

ROOT = pathlib.Path(__file__).resolve().parent.parent

HEAD = """\
// Generated by tools/embed_fixtures.py from fixtures/*.game -- edit those.
#include "unistrat/fixtures.hpp"

#include <array>
#include <utility>

#include "unistrat/errors.hpp"

namespace unistrat {

namespace {

"""

TAIL = """\
}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : kFixtures) out.emplace_back(name);
    return out;
}

const std::string& fixture_text(const std::string& name) {
    static const std::array<std::string, kFixtures.size()> texts = [] {
        std::array<std::string, kFixtures.size()> t;
        for (std::size_t i = 0; i < kFixtures.size(); ++i) t[i] = kFixtures[i].second;
        return t;
    }();
    for (std::size_t i = 0; i < kFixtures.size(); ++i)
        if (name == kFixtures[i].first) return texts[i];
    throw InputError("unknown fixture '" + name + "'");
}

GameFile load_fixture(const std::string& name) { return parse_game(fixture_text(name)); }

}  // namespace unistrat
"""


def main() -> None:
    parts = [HEAD]
    for name in ORDER:
        text = (ROOT / "fixtures" / f"{name}.game").read_text()
        var = "k_" + name.replace("-", "_")
        parts.append(f'constexpr const char* {var} = R"fixture({text})fixture";\n\n')
    names = ",\n    ".join(
        f'std::pair<const char*, const char*>{{"{name}", k_{name.replace("-", "_")}}}'
        for name in ORDER
    )
    parts.append(
        "constexpr std::array kFixtures = {\n    " + names + ",\n};\n\n"
    )
    parts.append(TAIL)
    (ROOT / "src" / "fixtures.cpp").write_text("".join(parts))


if __name__ == "__main__":
    main()
