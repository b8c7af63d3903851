#include "unistrat/strategy.hpp"

#include <limits>

namespace unistrat {

void MealyStrategy::validate() const {
    if (memory <= 0 || num_b <= 0) throw InputError("mealy machine needs memory and actions");
    if (init < 0 || init >= memory) throw InputError("mealy init out of range");
    if (act.size() != static_cast<std::size_t>(memory))
        throw InputError("mealy output table incomplete");
    if (upd.size() != static_cast<std::size_t>(memory) * num_b)
        throw InputError("mealy update table incomplete");
    for (int m : upd)
        if (m < 0 || m >= memory) throw InputError("mealy update out of range");
}

int MealyStrategy::run(const OppHistory& beta) const {
    int m = init;
    for (ActionB b : beta) {
        if (b < 0 || b >= num_b)
            throw InputError("opponent action " + std::to_string(b) + " outside alphabet");
        m = next(m, b);
    }
    return m;
}

ActionA MealyStrategy::eval(const OppHistory& beta) const { return out(run(beta)); }

FunctionStrategy MealyStrategy::as_function() const {
    MealyStrategy copy = *this;
    return FunctionStrategy(num_b, [copy](const OppHistory& beta) { return copy.eval(beta); });
}

std::vector<int> reachable_memory(const MealyStrategy& m) {
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(m.memory), false);
    order.push_back(m.init);
    seen[static_cast<std::size_t>(m.init)] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (ActionB b = 0; b < m.num_b; ++b) {
            int n = m.next(order[i], b);
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = true;
                order.push_back(n);
            }
        }
    }
    return order;
}

std::uint64_t mealy_raw_count(int num_a, int num_b, int memory_bound) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (int k = 1; k <= memory_bound; ++k) {
        std::uint64_t n = 1;
        auto mul = [&](std::uint64_t f) {
            if (f != 0 && n > cap / f) n = cap;
            else n *= f;
        };
        for (int i = 0; i < k; ++i) mul(static_cast<std::uint64_t>(num_a));
        for (int i = 0; i < k * num_b; ++i) mul(static_cast<std::uint64_t>(k));
        if (total > cap - n) return cap;
        total += n;
    }
    return total;
}

MealyEnumerator::MealyEnumerator(int num_a, int num_b, int memory_bound, const Budgets& budgets)
    : num_a_(num_a), num_b_(num_b), bound_(memory_bound) {
    if (num_a <= 0 || num_b <= 0 || memory_bound <= 0)
        throw InputError("mealy enumeration needs positive alphabet sizes and bound");
    raw_count_ = mealy_raw_count(num_a, num_b, memory_bound);
    if (raw_count_ > budgets.machine_enumeration)
        throw ResourceError("mealy enumeration of " + std::to_string(raw_count_) +
                            " machines exceeds budget " +
                            std::to_string(budgets.machine_enumeration));
    act_.assign(1, 0);
    upd_.assign(static_cast<std::size_t>(num_b_), 0);
}

MealyStrategy MealyEnumerator::current_machine() const {
    MealyStrategy m;
    m.memory = k_;
    m.init = 0;
    m.num_b = num_b_;
    m.act = act_;
    m.upd = upd_;
    return m;
}

bool MealyEnumerator::advance_tables() {
    // Odometer over (act, upd); upd is the low end so update tables vary fastest.
    for (std::size_t i = upd_.size(); i-- > 0;) {
        if (++upd_[i] < k_) return true;
        upd_[i] = 0;
    }
    for (std::size_t i = act_.size(); i-- > 0;) {
        if (++act_[i] < num_a_) return true;
        act_[i] = 0;
    }
    if (++k_ > bound_) return false;
    act_.assign(static_cast<std::size_t>(k_), 0);
    upd_.assign(static_cast<std::size_t>(k_) * num_b_, 0);
    return true;
}

bool MealyEnumerator::canonical() const {
    // Reachable in discovery order == identity relabeling.
    int discovered = 1;
    std::vector<int> order{0};
    std::vector<bool> seen(static_cast<std::size_t>(k_), false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (ActionB b = 0; b < num_b_; ++b) {
            int n = upd_[static_cast<std::size_t>(order[i]) * num_b_ + b];
            if (seen[static_cast<std::size_t>(n)]) continue;
            if (n != discovered) return false;  // discovery must count up 0,1,2,...
            seen[static_cast<std::size_t>(n)] = true;
            order.push_back(n);
            ++discovered;
        }
    }
    return discovered == k_;
}

std::optional<MealyStrategy> MealyEnumerator::next() {
    while (true) {
        if (!fresh_) {
            if (!advance_tables()) return std::nullopt;
        }
        fresh_ = false;
        if (canonical()) return current_machine();
    }
}

}  // namespace unistrat
