#include "edge_diagram.hpp"

#include <algorithm>

namespace ordwalk {

namespace {

// [a,b] vs [c,d] as level spans: nested either way or disjoint (touching endpoints
// share no level and count as disjoint).
bool nested_or_level_disjoint(int a, int b, int c, int d) {
    return (a <= c && d <= b) || (c <= a && b <= d) || b <= c || d <= a;
}

} // namespace

EdgeDiagram edge_diagram(const Perm& p) {
    const int n = p.size();
    if (n < 2) fail(ErrorCode::InvalidArgument, "edge diagram needs length >= 2");
    EdgeDiagram e;
    e.n = n;
    for (int i = 1; i < n; ++i) {
        const int a = p(i), b = p(i + 1);
        e.edges.push_back({std::min(a, b), std::max(a, b), a < b ? Dir::Up : Dir::Down});
    }
    std::sort(e.edges.begin(), e.edges.end());
    e.p = std::min(p(1), p(n));
    e.q = std::max(p(1), p(n));
    return e;
}

namespace {

// Reads the unique direction-consistent path through `edges` if one exists.
std::optional<Perm> read_path(const std::vector<Edge>& edges, int n) {
    if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;
    std::vector<std::vector<int>> incident(static_cast<size_t>(n) + 1);
    for (size_t k = 0; k < edges.size(); ++k) {
        incident[static_cast<size_t>(edges[k].low)].push_back(static_cast<int>(k));
        incident[static_cast<size_t>(edges[k].high)].push_back(static_cast<int>(k));
    }
    std::vector<int> endpoints;
    for (int v = 1; v <= n; ++v) {
        const size_t deg = incident[static_cast<size_t>(v)].size();
        if (deg > 2) return std::nullopt;
        if (deg == 1) endpoints.push_back(v);
    }
    if (endpoints.size() != 2) return std::nullopt;

    std::optional<Perm> found;
    for (int start : endpoints) {
        std::vector<char> used(edges.size(), 0);
        std::vector<int> path{start};
        int v = start;
        while (true) {
            int next = -1;
            for (int k : incident[static_cast<size_t>(v)]) {
                if (used[static_cast<size_t>(k)]) continue;
                const Edge& ed = edges[static_cast<size_t>(k)];
                if (ed.dir == Dir::Up && v == ed.low) next = ed.high;
                else if (ed.dir == Dir::Down && v == ed.high) next = ed.low;
                else continue;
                used[static_cast<size_t>(k)] = 1;
                break;
            }
            if (next < 0) break;
            path.push_back(next);
            v = next;
        }
        if (static_cast<int>(path.size()) == n) {
            if (found) fail(ErrorCode::Internal, "two direction-consistent readings of one path");
            found = Perm(path);
        }
    }
    return found;
}

} // namespace

ActionResult apply_level_action(const EdgeDiagram& e, const Perm& sigma) {
    const int n = e.n;
    if (sigma.size() != n - 1)
        fail(ErrorCode::LengthMismatch, "level action needs a permutation of the n-1 levels");
    std::vector<Edge> image;
    for (const Edge& ed : e.edges) {
        int lo = n, hi = 0;
        for (int l = ed.low; l < ed.high; ++l) {
            lo = std::min(lo, sigma(l));
            hi = std::max(hi, sigma(l));
        }
        if (hi - lo + 1 != ed.high - ed.low)
            return {ActionKind::NotWellDefined, std::nullopt, std::nullopt};
        image.push_back({lo, hi + 1, ed.dir});
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto perm = read_path(image, n);
    if (!perm) return {ActionKind::WellDefinedNotProper, std::move(image), std::nullopt};
    return {ActionKind::Proper, std::move(image), std::move(perm)};
}

bool has_cycle(const std::vector<Edge>& edges) {
    int n = 0;
    for (const Edge& e : edges) n = std::max(n, e.high);
    std::vector<std::vector<int>> out(static_cast<size_t>(n) + 1);
    for (const Edge& e : edges) {
        if (e.dir == Dir::Up) out[static_cast<size_t>(e.low)].push_back(e.high);
        else out[static_cast<size_t>(e.high)].push_back(e.low);
    }
    // 0 = unvisited, 1 = on stack, 2 = done.
    std::vector<char> color(static_cast<size_t>(n) + 1, 0);
    for (int s = 1; s <= n; ++s) {
        if (color[static_cast<size_t>(s)]) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        color[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < out[static_cast<size_t>(v)].size()) {
                const int w = out[static_cast<size_t>(v)][i++];
                if (color[static_cast<size_t>(w)] == 1) return true;
                if (color[static_cast<size_t>(w)] == 0) {
                    color[static_cast<size_t>(w)] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[static_cast<size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

std::vector<int> level_cover_counts(const EdgeDiagram& e) {
    std::vector<int> counts(static_cast<size_t>(e.n), 0);
    for (const Edge& ed : e.edges)
        for (int l = ed.low; l < ed.high; ++l) ++counts[static_cast<size_t>(l)];
    return counts;
}

std::string edge_diagram_text(const EdgeDiagram& e) {
    std::string out;
    for (const Edge& ed : e.edges) {
        out += std::to_string(ed.low);
        out.push_back('-');
        out += std::to_string(ed.high);
        out.push_back(' ');
        out.push_back(ed.dir == Dir::Up ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

std::vector<Interval> valid_intervals(const Perm& p) {
    const int n = p.size();
    std::vector<Interval> out;
    if (n < 2) return out;
    const EdgeDiagram e = edge_diagram(p);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 2; j <= n; ++j) {
            if (!nested_or_level_disjoint(i, j, e.p, e.q)) continue;
            bool ok = true;
            for (const Edge& ed : e.edges)
                if (!nested_or_level_disjoint(i, j, ed.low, ed.high)) { ok = false; break; }
            if (ok) out.push_back({i, j});
        }
    }
    if (n == 2) out.push_back({1, 2}); // the full interval, whose flip is the rotation
    std::sort(out.begin(), out.end());
    return out;
}

Perm flip_level_perm(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n && n >= 2))
        fail(ErrorCode::InvalidArgument, "bad flip interval");
    std::vector<int> v(static_cast<size_t>(n) - 1);
    for (int l = 1; l < n; ++l)
        v[static_cast<size_t>(l) - 1] = (i <= l && l < j) ? i + j - 1 - l : l;
    return Perm(std::move(v));
}

Perm flip_interval(const Perm& p, Interval iv) {
    const auto valid = valid_intervals(p);
    if (!std::binary_search(valid.begin(), valid.end(), iv))
        fail(ErrorCode::InvalidFlip, "interval [" + std::to_string(iv.lo) + "," +
                                         std::to_string(iv.hi) + "] is not valid here");
    const ActionResult r =
        apply_level_action(edge_diagram(p), flip_level_perm(iv.lo, iv.hi, p.size()));
    if (r.kind != ActionKind::Proper)
        fail(ErrorCode::Internal, "valid flip produced a non-proper diagram");
    return *r.perm;
}

std::vector<CylBlock> bordered_cylindrical_blocks(const Perm& p) {
    const int n = p.size();
    std::vector<CylBlock> out;
    if (n < 2) return out;
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(p(i))] = i;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 2; b <= n; ++b) {
            const int m = b - a + 1;
            if (m == n) continue; // the full grid is handled below
            std::vector<char> in(static_cast<size_t>(n) + 1, 0);
            for (int v = a; v <= b; ++v) in[static_cast<size_t>(pos[static_cast<size_t>(v)])] = 1;
            int start = 0, starts = 0;
            for (int i = 1; i <= n; ++i) {
                const int prev = i == 1 ? n : i - 1;
                if (in[static_cast<size_t>(i)] && !in[static_cast<size_t>(prev)]) {
                    ++starts;
                    start = i;
                }
            }
            if (starts != 1) continue; // positions are not a single cyclic run
            const int first = p((start - 1) % n + 1);
            const int last = p((start + m - 2) % n + 1);
            if (std::min(first, last) != a || std::max(first, last) != b) continue;
            out.push_back({a, b, start, m, start + m - 1 > n});
        }
    }
    out.push_back({1, n, 1, n, false});
    std::sort(out.begin(), out.end());
    return out;
}

Perm flip_block(const Perm& p, const CylBlock& b) {
    const auto blocks = bordered_cylindrical_blocks(p);
    if (!std::binary_search(blocks.begin(), blocks.end(), b))
        fail(ErrorCode::NotABlock, "not a bordered cylindrical block of this permutation");
    const int n = p.size();
    const int c = b.vlo + b.vhi;
    if (b.len == n) return reverse_complement(p);
    std::vector<int> out = p.entries();
    if (!b.wraps) {
        for (int t = 0; t < b.len; ++t)
            out[static_cast<size_t>(b.start - 1 + t)] = c - p(b.start + b.len - 1 - t);
        return Perm(std::move(out));
    }
    // Wrap-around block: rotate the contents 180 degrees and exchange the two sides;
    // the entries outside the block keep their order and shift to the middle.
    const int r = n - b.start + 1; // entries at positions start..n
    const int l = b.len - r;       // entries at positions 1..l
    std::vector<int> flipped(static_cast<size_t>(b.len));
    for (int t = 0; t < b.len; ++t)
        flipped[static_cast<size_t>(t)] = c - p((b.start + b.len - 2 - t) % n + 1);
    for (int t = 0; t < l; ++t) out[static_cast<size_t>(n - l + t)] = flipped[static_cast<size_t>(t)];
    for (int t = 0; t < r; ++t) out[static_cast<size_t>(t)] = flipped[static_cast<size_t>(l + t)];
    for (int t = 0; t < b.start - 1 - l; ++t) out[static_cast<size_t>(r + t)] = p(l + 1 + t);
    return Perm(std::move(out));
}

} // namespace ordwalk
