#include "e7/tensor.hpp"

#include <algorithm>
#include <tuple>

namespace e7 {

TrilinearTensor::TrilinearTensor(std::size_t n, std::vector<TensorEntry> entries) : n_(n) {
  if (n > 0xFFFF) throw std::invalid_argument("tensor dimension too large");
  for (const auto& e : entries)
    if (e.a >= n || e.b >= n || e.c >= n || e.out >= n)
      throw std::invalid_argument("tensor entry index out of range");
  auto key = [](const TensorEntry& e) { return std::tie(e.a, e.b, e.c, e.out); };
  std::sort(entries.begin(), entries.end(),
            [&](const TensorEntry& l, const TensorEntry& r) { return key(l) < key(r); });
  for (auto& e : entries) {
    if (!entries_.empty() && key(entries_.back()) == key(e)) {
      entries_.back().value += e.value;
    } else {
      if (!entries_.empty() && entries_.back().value == 0) entries_.pop_back();
      entries_.push_back(std::move(e));
    }
  }
  if (!entries_.empty() && entries_.back().value == 0) entries_.pop_back();
  offsets_.assign(n * n + 1, 0);
  for (const auto& e : entries_) ++offsets_[e.a * n + e.b + 1];
  for (std::size_t k = 1; k < offsets_.size(); ++k) offsets_[k] += offsets_[k - 1];
}

TrilinearTensor TrilinearTensor::scaled(const Rational& c) const {
  std::vector<TensorEntry> e = entries_;
  for (auto& x : e) x.value *= c;
  return TrilinearTensor(n_, std::move(e));
}

std::vector<std::pair<std::size_t, Rational>> TrilinearTensor::basis_value(std::size_t a,
                                                                           std::size_t b,
                                                                           std::size_t c) const {
  std::vector<std::pair<std::size_t, Rational>> out;
  auto [lo, hi] = range(a, b);
  for (std::size_t k = lo; k < hi; ++k)
    if (entries_[k].c == c) out.emplace_back(entries_[k].out, entries_[k].value);
  return out;
}

std::optional<std::vector<ModTensorEntry>> reduce_tensor(const TrilinearTensor& t,
                                                         const PrimeField& field) {
  std::vector<ModTensorEntry> out;
  out.reserve(t.nonzeros());
  for (const auto& e : t.entries()) {
    auto v = field.reduce(e.value);
    if (!v) return std::nullopt;
    if (*v != 0) out.push_back({e.a, e.b, e.c, e.out, *v});
  }
  return out;
}

}  // namespace e7
