#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace ordwalk {

// Permutation of {1..n} in one-line notation; all public indices are 1-based.
class Perm {
public:
    Perm() = default; // the empty permutation (n = 0)
    explicit Perm(std::vector<int> entries);
    static Perm identity(int n);

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& entries() const { return v_; }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> v_;
};

// Ordinal pattern of a walk: result(i) = rank of values[i-1], 1 = smallest.
// Throws RepeatedValue on ties (the pattern is undefined there).
Perm pattern_of_walk(std::span<const double> values);

// Pattern of the walk with increments `steps` started at 0 (walk length = steps + 1).
Perm pattern_of_steps(std::span<const double> steps);

Perm reverse_complement(const Perm& p);

// compose(pi, tau)(i) = tau(pi(i)): pi applied first.
Perm compose(const Perm& pi, const Perm& tau);

Perm inverse(const Perm& p);

// Digit string for n <= 9, comma-separated otherwise.
std::string format_perm(const Perm& p);
// Accepts both forms; throws ParseError on malformed input.
Perm parse_perm(const std::string& text);

// Signed permutation: entries are nonzero, |entries| is a permutation of {1..k}.
// A negative entry is a "barred" entry (rendered 2' in machine form).
class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> entries);
    static SignedPerm identity(int k);

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& entries() const { return v_; }

    bool operator==(const SignedPerm&) const = default;
    auto operator<=>(const SignedPerm&) const = default;

private:
    std::vector<int> v_;
};

// result(i) = -mu(k+1-i): reversal plus bar toggle (an involution).
SignedPerm signed_reverse_complement(const SignedPerm& mu);

// Replace entry t of mu by a block patterned like blocks[t] (its reverse-complement
// when mu(t) is barred); block value ranges are stacked in the order given by |mu|.
SignedPerm inflate(const SignedPerm& mu, const std::vector<SignedPerm>& blocks);

// Ranks of |word| with the signs of word kept (word entries distinct and nonzero).
SignedPerm signed_pattern(std::span<const int> word);

// Machine form: comma-separated magnitudes, trailing apostrophe for barred ("3',1,2'").
std::string format_signed(const SignedPerm& mu);
// Human form: digits with combining overline for barred entries (k <= 9).
std::string format_signed_pretty(const SignedPerm& mu);
// Accepts the machine form and the compact digit form ("3'12'").
SignedPerm parse_signed(const std::string& text);

} // namespace ordwalk
