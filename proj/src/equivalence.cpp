#include "equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ordwalk {

EquivalenceClass class_of(const Perm& p) {
    std::set<Perm> seen{p};
    std::deque<Perm> queue{p};
    while (!queue.empty()) {
        const Perm cur = queue.front();
        queue.pop_front();
        for (const Interval& iv : valid_intervals(cur)) {
            Perm next = flip_interval(cur, iv);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<Perm> members(seen.begin(), seen.end());
    return {members.front(), std::move(members)};
}

std::optional<Perm> equivalence_oracle(const Perm& pi, const Perm& tau, int max_n) {
    if (pi.size() != tau.size())
        fail(ErrorCode::LengthMismatch, "oracle requires equal lengths");
    const int n = pi.size();
    if (n < 2) fail(ErrorCode::InvalidArgument, "oracle needs length >= 2");
    if (n > max_n)
        fail(ErrorCode::SizeTooLarge, "oracle search limited to n <= " + std::to_string(max_n));
    const EdgeDiagram ep = edge_diagram(pi);
    const EdgeDiagram et = edge_diagram(tau);
    std::vector<int> sig(static_cast<size_t>(n) - 1);
    std::iota(sig.begin(), sig.end(), 1);
    do {
        const Perm sigma{std::vector<int>(sig)};
        const ActionResult r = apply_level_action(ep, sigma);
        if (r.image && *r.image == et.edges) return sigma;
    } while (std::next_permutation(sig.begin(), sig.end()));
    return std::nullopt;
}

std::vector<EquivalenceClass> enumerate_classes(int n, int max_n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
    if (n > max_n)
        fail(ErrorCode::SizeTooLarge, "class enumeration limited to n <= " + std::to_string(max_n));
    std::vector<EquivalenceClass> classes;
    std::set<Perm> visited;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        const Perm p{std::vector<int>(v)};
        if (visited.count(p)) continue;
        EquivalenceClass cls = class_of(p);
        visited.insert(cls.members.begin(), cls.members.end());
        classes.push_back(std::move(cls));
    } while (std::next_permutation(v.begin(), v.end()));
    return classes;
}

std::optional<std::vector<FlipStep>> flip_witness(const Perm& pi, const Perm& tau) {
    if (pi.size() != tau.size())
        fail(ErrorCode::LengthMismatch, "witness requires equal lengths");
    if (pi == tau) return std::vector<FlipStep>{};
    std::map<Perm, std::pair<Perm, Interval>> parent;
    std::set<Perm> seen{pi};
    std::deque<Perm> queue{pi};
    while (!queue.empty()) {
        const Perm cur = queue.front();
        queue.pop_front();
        for (const Interval& iv : valid_intervals(cur)) {
            Perm next = flip_interval(cur, iv);
            if (!seen.insert(next).second) continue;
            parent.emplace(next, std::make_pair(cur, iv));
            if (next == tau) {
                std::vector<FlipStep> steps;
                for (Perm at = tau; at != pi;) {
                    const auto& [prev, flipped] = parent.at(at);
                    steps.push_back({prev, flipped});
                    at = prev;
                }
                std::reverse(steps.begin(), steps.end());
                return steps;
            }
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

} // namespace ordwalk
