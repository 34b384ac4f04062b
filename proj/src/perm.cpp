#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ordwalk {

Perm::Perm(std::vector<int> entries) : v_(std::move(entries)) {
    const int n = size();
    if (n < 1) fail(ErrorCode::InvalidArgument, "permutation must have length >= 1");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)])
            fail(ErrorCode::InvalidArgument, "entries are not a permutation of 1..n");
        seen[static_cast<size_t>(x)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm pattern_of_walk(std::span<const double> values) {
    const int n = static_cast<int>(values.size());
    if (n < 1) fail(ErrorCode::InvalidArgument, "walk must have at least one value");
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)]; });
    std::vector<int> rank(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (r > 0 && values[static_cast<size_t>(idx[static_cast<size_t>(r)])] ==
                         values[static_cast<size_t>(idx[static_cast<size_t>(r - 1)])])
            fail(ErrorCode::RepeatedValue, "pattern undefined: repeated walk value");
        rank[static_cast<size_t>(idx[static_cast<size_t>(r)])] = r + 1;
    }
    return Perm(std::move(rank));
}

Perm pattern_of_steps(std::span<const double> steps) {
    std::vector<double> walk(steps.size() + 1);
    walk[0] = 0.0;
    for (size_t i = 0; i < steps.size(); ++i) walk[i + 1] = walk[i] + steps[i];
    return pattern_of_walk(walk);
}

Perm reverse_complement(const Perm& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = n + 1 - p(n + 1 - i);
    return Perm(std::move(v));
}

Perm compose(const Perm& pi, const Perm& tau) {
    if (pi.size() != tau.size())
        fail(ErrorCode::LengthMismatch, "compose requires equal lengths");
    const int n = pi.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = tau(pi(i));
    return Perm(std::move(v));
}

Perm inverse(const Perm& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(p(i)) - 1] = i;
    return Perm(std::move(v));
}

std::string format_perm(const Perm& p) {
    std::string out;
    if (p.size() <= 9) {
        for (int x : p.entries()) out.push_back(static_cast<char>('0' + x));
    } else {
        for (int i = 0; i < p.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(p.entries()[static_cast<size_t>(i)]);
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

int parse_int(const std::string& tok) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    return value;
}

} // namespace

Perm parse_perm(const std::string& text) {
    std::vector<int> v;
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        for (const auto& tok : split_tokens(text)) v.push_back(parse_int(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                fail(ErrorCode::ParseError, "bad character in pattern: '" + text + "'");
            v.push_back(c - '0');
        }
    }
    if (v.empty()) fail(ErrorCode::ParseError, "empty pattern");
    try {
        return Perm(std::move(v));
    } catch (const OwError& e) {
        fail(ErrorCode::ParseError, std::string(e.what()) + ": '" + text + "'");
    }
}

SignedPerm::SignedPerm(std::vector<int> entries) : v_(std::move(entries)) {
    const int k = size();
    if (k < 1) fail(ErrorCode::InvalidArgument, "signed permutation must have length >= 1");
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (int x : v_) {
        const int a = std::abs(x);
        if (a < 1 || a > k || seen[static_cast<size_t>(a)])
            fail(ErrorCode::InvalidArgument, "magnitudes are not a permutation of 1..k");
        seen[static_cast<size_t>(a)] = 1;
    }
}

SignedPerm SignedPerm::identity(int k) {
    std::vector<int> v(static_cast<size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    return SignedPerm(std::move(v));
}

SignedPerm signed_reverse_complement(const SignedPerm& mu) {
    const int k = mu.size();
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) v[static_cast<size_t>(i) - 1] = -mu(k + 1 - i);
    return SignedPerm(std::move(v));
}

SignedPerm inflate(const SignedPerm& mu, const std::vector<SignedPerm>& blocks) {
    const int k = mu.size();
    if (static_cast<int>(blocks.size()) != k)
        fail(ErrorCode::LengthMismatch, "inflate needs one block per entry");
    // Offset for slot t: total length of blocks whose entry magnitude is smaller.
    std::vector<int> offset(static_cast<size_t>(k), 0);
    for (int t = 0; t < k; ++t)
        for (int u = 0; u < k; ++u)
            if (std::abs(mu.entries()[static_cast<size_t>(u)]) <
                std::abs(mu.entries()[static_cast<size_t>(t)]))
                offset[static_cast<size_t>(t)] += blocks[static_cast<size_t>(u)].size();
    std::vector<int> out;
    for (int t = 0; t < k; ++t) {
        const int e = mu.entries()[static_cast<size_t>(t)];
        const SignedPerm content =
            e > 0 ? blocks[static_cast<size_t>(t)]
                  : signed_reverse_complement(blocks[static_cast<size_t>(t)]);
        for (int c : content.entries()) {
            const int v = offset[static_cast<size_t>(t)] + std::abs(c);
            out.push_back(c > 0 ? v : -v);
        }
    }
    return SignedPerm(std::move(out));
}

SignedPerm signed_pattern(std::span<const int> word) {
    const int k = static_cast<int>(word.size());
    if (k < 1) fail(ErrorCode::InvalidArgument, "empty word");
    std::vector<int> mags(word.begin(), word.end());
    for (int& x : mags) x = std::abs(x);
    std::vector<int> sorted = mags;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), mags[static_cast<size_t>(i)]);
        const int rank = static_cast<int>(it - sorted.begin()) + 1;
        out[static_cast<size_t>(i)] = word[static_cast<size_t>(i)] > 0 ? rank : -rank;
    }
    return SignedPerm(std::move(out));
}

std::string format_signed(const SignedPerm& mu) {
    std::string out;
    for (int i = 0; i < mu.size(); ++i) {
        if (i) out.push_back(',');
        const int e = mu.entries()[static_cast<size_t>(i)];
        out += std::to_string(std::abs(e));
        if (e < 0) out.push_back('\'');
    }
    return out;
}

std::string format_signed_pretty(const SignedPerm& mu) {
    static const char* kOverline = "\xcc\x84"; // U+0304 combining macron
    std::string out;
    for (int i = 0; i < mu.size(); ++i) {
        const int e = mu.entries()[static_cast<size_t>(i)];
        if (mu.size() > 9 && i) out.push_back(',');
        out += std::to_string(std::abs(e));
        if (e < 0) out += kOverline;
    }
    return out;
}

SignedPerm parse_signed(const std::string& text) {
    std::vector<int> v;
    auto push_entry = [&](const std::string& tok) {
        if (tok.empty()) fail(ErrorCode::ParseError, "empty signed entry");
        bool barred = tok.back() == '\'';
        const std::string num = barred ? tok.substr(0, tok.size() - 1) : tok;
        const int mag = parse_int(num);
        if (mag < 1) fail(ErrorCode::ParseError, "signed entry must be positive: '" + tok + "'");
        v.push_back(barred ? -mag : mag);
    };
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        for (const auto& tok : split_tokens(text)) push_entry(tok);
    } else {
        for (size_t i = 0; i < text.size();) {
            const char c = text[i];
            if (c < '1' || c > '9')
                fail(ErrorCode::ParseError, "bad character in signed pattern: '" + text + "'");
            std::string tok(1, c);
            ++i;
            if (i < text.size() && text[i] == '\'') tok.push_back('\''), ++i;
            push_entry(tok);
        }
    }
    if (v.empty()) fail(ErrorCode::ParseError, "empty signed pattern");
    try {
        return SignedPerm(std::move(v));
    } catch (const OwError& e) {
        fail(ErrorCode::ParseError, std::string(e.what()) + ": '" + text + "'");
    }
}

} // namespace ordwalk
