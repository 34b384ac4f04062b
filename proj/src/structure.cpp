#include "structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ordwalk {

namespace {

void validate_borders(const std::vector<int>& borders, int n) {
    if (borders.empty() || borders.front() != 1 || borders.back() != n)
        fail(ErrorCode::InvalidArgument, "partition borders must run from 1 to n");
    for (size_t i = 1; i < borders.size(); ++i)
        if (borders[i] <= borders[i - 1])
            fail(ErrorCode::InvalidArgument, "partition borders must be strictly increasing");
}

} // namespace

std::vector<int> irreducible_borders(const Perm& p) {
    const int n = p.size();
    if (n == 1) return {1};
    std::set<int> borders{1, n};
    for (const Interval& iv : valid_intervals(p)) {
        borders.insert(iv.lo);
        borders.insert(iv.hi);
    }
    return {borders.begin(), borders.end()};
}

std::vector<int> irreducible_borders_bruteforce(const Perm& p, int max_n) {
    const int n = p.size();
    if (n == 1) return {1};
    if (n > max_n)
        fail(ErrorCode::SizeTooLarge, "exhaustive partition limited to n <= " + std::to_string(max_n));
    const EdgeDiagram e = edge_diagram(p);

    // satisfied[s][t]: the image of levels s..t-1 is a set of adjacent levels in
    // ascending or descending order, under every proper level action seen so far.
    std::vector<std::vector<char>> satisfied(static_cast<size_t>(n) + 1,
                                             std::vector<char>(static_cast<size_t>(n) + 1, 1));
    std::vector<int> sig(static_cast<size_t>(n) - 1);
    std::iota(sig.begin(), sig.end(), 1);
    do {
        const Perm sigma{std::vector<int>(sig)};
        if (apply_level_action(e, sigma).kind != ActionKind::Proper) continue;
        for (int s = 1; s < n; ++s) {
            for (int t = s + 1; t <= n; ++t) {
                if (!satisfied[static_cast<size_t>(s)][static_cast<size_t>(t)]) continue;
                bool asc = true, desc = true;
                for (int l = s; l < t - 1; ++l) {
                    if (sigma(l + 1) != sigma(l) + 1) asc = false;
                    if (sigma(l + 1) != sigma(l) - 1) desc = false;
                }
                if (!asc && !desc)
                    satisfied[static_cast<size_t>(s)][static_cast<size_t>(t)] = 0;
            }
        }
    } while (std::next_permutation(sig.begin(), sig.end()));

    // The maximal satisfied intervals must tile [1,n].
    std::vector<std::pair<int, int>> maximal;
    for (int s = 1; s < n; ++s)
        for (int t = s + 1; t <= n; ++t) {
            if (!satisfied[static_cast<size_t>(s)][static_cast<size_t>(t)]) continue;
            bool is_max = true;
            for (int s2 = 1; s2 <= s && is_max; ++s2)
                for (int t2 = t; t2 <= n && is_max; ++t2)
                    if ((s2 != s || t2 != t) &&
                        satisfied[static_cast<size_t>(s2)][static_cast<size_t>(t2)])
                        is_max = false;
            if (is_max) maximal.push_back({s, t});
        }
    std::sort(maximal.begin(), maximal.end());
    std::vector<int> borders{1};
    for (const auto& [s, t] : maximal) {
        if (s != borders.back())
            fail(ErrorCode::Internal, "maximal intervals do not tile [1,n]");
        borders.push_back(t);
    }
    if (borders.back() != n) fail(ErrorCode::Internal, "maximal intervals do not reach n");
    return borders;
}

Perm block_action_level_perm(const std::vector<int>& borders, const SignedPerm& mu) {
    const int n = borders.back();
    validate_borders(borders, n);
    const int k = static_cast<int>(borders.size()) - 1;
    if (mu.size() != k)
        fail(ErrorCode::LengthMismatch, "block action needs one entry per block");
    if (n < 2) fail(ErrorCode::InvalidArgument, "block action needs length >= 2");

    std::vector<int> width(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t)
        width[static_cast<size_t>(t)] = borders[static_cast<size_t>(t) + 1] - borders[static_cast<size_t>(t)];
    // slot s (1-based destination) is filled by the block whose entry magnitude is s.
    std::vector<int> block_of_slot(static_cast<size_t>(k) + 1, 0);
    for (int t = 1; t <= k; ++t) block_of_slot[static_cast<size_t>(std::abs(mu(t)))] = t;
    std::vector<int> slot_start(static_cast<size_t>(k) + 1, 0);
    int acc = 1;
    for (int s = 1; s <= k; ++s) {
        slot_start[static_cast<size_t>(s)] = acc;
        acc += width[static_cast<size_t>(block_of_slot[static_cast<size_t>(s)]) - 1];
    }

    std::vector<int> sig(static_cast<size_t>(n) - 1);
    for (int t = 1; t <= k; ++t) {
        const int s = std::abs(mu(t));
        const int w = width[static_cast<size_t>(t) - 1];
        for (int d = 0; d < w; ++d) {
            const int level = borders[static_cast<size_t>(t) - 1] + d;
            sig[static_cast<size_t>(level) - 1] =
                mu(t) > 0 ? slot_start[static_cast<size_t>(s)] + d
                          : slot_start[static_cast<size_t>(s)] + w - 1 - d;
        }
    }
    return Perm(std::move(sig));
}

ActionResult apply_block_action_on(const Perm& p, const std::vector<int>& borders,
                                   const SignedPerm& mu) {
    return apply_level_action(edge_diagram(p), block_action_level_perm(borders, mu));
}

ActionResult apply_block_action(const Perm& p, const SignedPerm& mu) {
    return apply_block_action_on(p, irreducible_borders(p), mu);
}

std::vector<SignedPerm> valid_block_actions(const Perm& p, int max_k) {
    const std::vector<int> borders = irreducible_borders(p);
    const int k = static_cast<int>(borders.size()) - 1;
    std::vector<SignedPerm> out;
    if (k < 1) return out;
    if (k > max_k)
        fail(ErrorCode::SizeTooLarge, "block-action enumeration limited to k <= " + std::to_string(max_k));
    const EdgeDiagram e = edge_diagram(p);
    std::vector<int> base(static_cast<size_t>(k));
    std::iota(base.begin(), base.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> v(base);
            for (int t = 0; t < k; ++t)
                if (mask >> t & 1u) v[static_cast<size_t>(t)] = -v[static_cast<size_t>(t)];
            SignedPerm mu{std::move(v)};
            if (apply_level_action(e, block_action_level_perm(borders, mu)).kind ==
                ActionKind::Proper)
                out.push_back(std::move(mu));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

namespace {

bool trichotomy_and_slots(const Perm& p, const std::vector<int>& borders,
                          const std::vector<SignedPerm>& actions, int ii, int jj) {
    const int a = borders[static_cast<size_t>(ii)];
    const int b = borders[static_cast<size_t>(jj)];
    for (const Edge& ed : edge_diagram(p).edges) {
        const bool nested_or_disjoint = (a <= ed.low && ed.high <= b) ||
                                        (ed.low <= a && b <= ed.high) || b <= ed.low ||
                                        ed.high <= a;
        if (!nested_or_disjoint) return false;
    }
    for (const SignedPerm& mu : actions) {
        int lo = mu.size() + 1, hi = 0;
        for (int r = ii + 1; r <= jj; ++r) {
            lo = std::min(lo, std::abs(mu(r)));
            hi = std::max(hi, std::abs(mu(r)));
        }
        if (hi - lo + 1 != jj - ii) return false;
    }
    return true;
}

} // namespace

bool is_cohesive(const Perm& p, int a, int b, int max_k) {
    const int n = p.size();
    if (!(1 <= a && a < b && b <= n))
        fail(ErrorCode::InvalidArgument, "cohesive test needs 1 <= a < b <= n");
    const std::vector<int> borders = irreducible_borders(p);
    const auto ia = std::find(borders.begin(), borders.end(), a);
    const auto ib = std::find(borders.begin(), borders.end(), b);
    if (ia == borders.end() || ib == borders.end()) return false;
    const auto actions = valid_block_actions(p, max_k);
    return trichotomy_and_slots(p, borders, actions,
                                static_cast<int>(ia - borders.begin()),
                                static_cast<int>(ib - borders.begin()));
}

std::vector<Interval> cohesive_intervals(const Perm& p, int max_k) {
    const std::vector<int> borders = irreducible_borders(p);
    const int k = static_cast<int>(borders.size()) - 1;
    std::vector<Interval> out;
    if (k < 1) return out;
    const auto actions = valid_block_actions(p, max_k);
    for (int ii = 0; ii < k; ++ii)
        for (int jj = ii + 1; jj <= k; ++jj)
            if (trichotomy_and_slots(p, borders, actions, ii, jj))
                out.push_back({borders[static_cast<size_t>(ii)], borders[static_cast<size_t>(jj)]});
    std::sort(out.begin(), out.end());
    return out;
}

Decomposition decompose_block_action(const Perm& p, const std::vector<int>& borders,
                                     const SignedPerm& mu, int i, int j) {
    const int n = p.size();
    validate_borders(borders, n);
    const int l = static_cast<int>(borders.size()) - 1;
    if (mu.size() != l)
        fail(ErrorCode::LengthMismatch, "mu must have one entry per block");
    if (!(0 <= i && i < j && j <= l) || j - i < 2 || (i == 0 && j == l))
        fail(ErrorCode::InvalidArgument,
             "decomposition needs border indices 0 <= i < j <= k spanning 2+ blocks, not all of them");
    if (apply_block_action_on(p, borders, mu).kind != ActionKind::Proper)
        fail(ErrorCode::NoValidDecomposition, "mu is not valid for this partition");
    if (!is_cohesive(p, borders[static_cast<size_t>(i)], borders[static_cast<size_t>(j)]))
        fail(ErrorCode::NoValidDecomposition, "the collapsed interval is not cohesive");

    int lo = l + 1, hi = 0;
    for (int r = i + 1; r <= j; ++r) {
        lo = std::min(lo, std::abs(mu(r)));
        hi = std::max(hi, std::abs(mu(r)));
    }
    if (hi - lo + 1 != j - i)
        fail(ErrorCode::NoValidDecomposition, "collapsed blocks do not land on contiguous slots");

    const SignedPerm beta0 = signed_pattern(
        std::span<const int>(mu.entries().data() + i, static_cast<size_t>(j - i)));

    // The candidate is usable when its action, confined to the collapsed interval,
    // is proper on p.
    const auto candidate_valid = [&](const SignedPerm& beta) {
        std::vector<int> v(static_cast<size_t>(l));
        for (int t = 1; t <= l; ++t) {
            if (t <= i || t > j) {
                v[static_cast<size_t>(t) - 1] = t;
            } else {
                const int e = beta(t - i);
                v[static_cast<size_t>(t) - 1] = e > 0 ? i + e : -(i - e);
            }
        }
        return apply_block_action_on(p, borders, SignedPerm{std::move(v)}).kind ==
               ActionKind::Proper;
    };

    bool collapsed_positive;
    SignedPerm beta = beta0;
    if (candidate_valid(beta0)) {
        collapsed_positive = true;
    } else {
        beta = signed_reverse_complement(beta0);
        if (!candidate_valid(beta))
            fail(ErrorCode::NoValidDecomposition, "neither sign choice yields a valid inner action");
        collapsed_positive = false;
    }

    std::vector<int> word;
    for (int t = 1; t <= i; ++t) word.push_back(mu(t));
    word.push_back(collapsed_positive ? lo : -lo);
    for (int t = j + 1; t <= l; ++t) word.push_back(mu(t));
    const SignedPerm alpha = signed_pattern(word);

    std::vector<SignedPerm> blocks(static_cast<size_t>(alpha.size()), SignedPerm::identity(1));
    blocks[static_cast<size_t>(i)] = beta;
    if (!(inflate(alpha, blocks) == mu))
        fail(ErrorCode::Internal, "decomposition does not re-inflate to mu");
    return {alpha, beta};
}

} // namespace ordwalk
