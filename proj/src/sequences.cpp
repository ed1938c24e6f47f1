#include "genproj/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace genproj {

FinSeq FinSeq::of(std::initializer_list<std::pair<int, Rational>> entries) {
    FinSeq x;
    for (const auto& [i, v] : entries) x.set(i, v);
    return x;
}

void FinSeq::set(int index, const Rational& value) {
    if (index < 0) throw std::invalid_argument("negative sequence index");
    if (value == 0)
        entries_.erase(index);
    else
        entries_[index] = value;
}

Rational FinSeq::value(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
}

FinSeq FinSeq::plus(const FinSeq& other) const {
    FinSeq out = *this;
    for (const auto& [i, v] : other.entries_) out.set(i, out.value(i) + v);
    return out;
}

FinSeq FinSeq::minus(const FinSeq& other) const {
    FinSeq out = *this;
    for (const auto& [i, v] : other.entries_) out.set(i, out.value(i) - v);
    return out;
}

FinSeq FinSeq::scaled(const Rational& a) const {
    FinSeq out;
    if (a == 0) return out;
    for (const auto& [i, v] : entries_) out.set(i, a * v);
    return out;
}

FinSeq atom(int index, const Rational& a) {
    FinSeq x;
    x.set(index, a);
    return x;
}

TailSeq::TailSeq(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

TailSeq TailSeq::minus(const TailSeq& other) const {
    int len = std::max(prefix_len(), other.prefix_len());
    std::vector<Rational> prefix(static_cast<size_t>(len));
    for (int i = 1; i <= len; ++i)
        prefix[static_cast<size_t>(i) - 1] = value(i) - other.value(i);
    return TailSeq(std::move(prefix), tail_ - other.tail_);
}

Rational TailSeq::value(int i) const {
    if (i < 1) throw std::invalid_argument("TailSeq index must be >= 1");
    if (i <= prefix_len()) return prefix_[static_cast<size_t>(i) - 1];
    return tail_;
}

Rational norm_l1(const FinSeq& x) {
    Rational s = 0;
    for (const auto& [i, v] : x.entries())
        if (i >= 1) s += rabs(v);
    return s;
}

Rational norm_l1_cdual(const FinSeq& x) {
    Rational s = 0;
    for (const auto& [i, v] : x.entries()) s += rabs(v);
    return s;
}

Rational norm_sup(const TailSeq& phi) {
    Rational m = rabs(phi.tail());
    for (const auto& v : phi.prefix()) {
        Rational a = rabs(v);
        if (a > m) m = a;
    }
    return m;
}

Rational pair(const TailSeq& phi, const FinSeq& x) {
    if (x.has_zero_slot())
        throw std::invalid_argument("pair: x carries a 0 slot; use pair_c");
    Rational s = 0;
    for (const auto& [i, v] : x.entries()) s += phi.value(i) * v;
    return s;
}

Rational pair_c(const FinSeq& x, const TailSeq& t) {
    Rational s = x.value(0) * t.tail();
    for (const auto& [i, v] : x.entries())
        if (i >= 1) s += v * t.value(i);
    return s;
}

}  // namespace genproj
