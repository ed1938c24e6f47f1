#pragma once

#include <map>
#include <vector>

#include "genproj/rational.hpp"

namespace genproj {

// Finitely supported sequence over exact rationals. Models elements of the
// l1 space (indices 1,2,...). Index 0 is an optional extra slot that is
// meaningful only when the sequence plays the role of a c-dual element; the
// plain l1 pairing rejects it.
//
// Representation invariant: stored entries are nonzero; an absent index
// means the value 0.
class FinSeq {
  public:
    FinSeq() = default;

    // entries of the form {index, value}; zero values are dropped
    static FinSeq of(std::initializer_list<std::pair<int, Rational>> entries);

    void set(int index, const Rational& value);
    Rational value(int index) const;

    const std::map<int, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool has_zero_slot() const { return entries_.count(0) > 0; }
    int max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    FinSeq plus(const FinSeq& other) const;
    FinSeq minus(const FinSeq& other) const;
    FinSeq scaled(const Rational& a) const;

    bool operator==(const FinSeq& other) const { return entries_ == other.entries_; }
    bool operator!=(const FinSeq& other) const { return !(*this == other); }
    bool operator<(const FinSeq& other) const { return entries_ < other.entries_; }

  private:
    std::map<int, Rational> entries_;
};

// Unit atom a*e_i.
FinSeq atom(int index, const Rational& a);

// Eventually constant sequence: explicit prefix (indices 1..m) followed by a
// constant tail. Models elements of l_infty and of c; it lies in c0 exactly
// when the tail is 0. Normalized on construction: trailing prefix entries
// equal to the tail are folded into it.
class TailSeq {
  public:
    TailSeq() : tail_(0) {}
    TailSeq(std::vector<Rational> prefix, Rational tail);

    static TailSeq constant(const Rational& r) { return TailSeq({}, r); }

    // value at index i >= 1
    Rational value(int i) const;

    const std::vector<Rational>& prefix() const { return prefix_; }
    const Rational& tail() const { return tail_; }
    int prefix_len() const { return static_cast<int>(prefix_.size()); }
    bool is_zero() const { return prefix_.empty() && tail_ == 0; }
    bool is_constant() const { return prefix_.empty(); }
    bool in_c0() const { return tail_ == 0; }

    TailSeq minus(const TailSeq& other) const;

    bool operator==(const TailSeq& other) const {
        return tail_ == other.tail_ && prefix_ == other.prefix_;
    }
    bool operator!=(const TailSeq& other) const { return !(*this == other); }

  private:
    std::vector<Rational> prefix_;
    Rational tail_;
};

// l1 norm over indices >= 1 (the optional 0 slot does not contribute).
Rational norm_l1(const FinSeq& x);

// Norm of x in the role of a c-dual element: the 0 slot contributes.
Rational norm_l1_cdual(const FinSeq& x);

// sup norm of an eventually constant sequence.
Rational norm_sup(const TailSeq& phi);

// l_infty/l1 pairing <phi, x> = sum phi_i x_i. Rejects x carrying a 0 slot;
// that slot only pairs against c elements (use pair_c).
Rational pair(const TailSeq& phi, const FinSeq& x);

// c*/c pairing <x, t> = x_0 * lim t + sum_{n>=1} x_n t_n.
Rational pair_c(const FinSeq& x, const TailSeq& t);

}  // namespace genproj
