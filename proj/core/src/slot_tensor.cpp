#include "uprod/slot_tensor.hpp"

#include <algorithm>

#include "uprod/errors.hpp"

namespace uprod {

SlotTensor::SlotTensor(Field field) : field_(field) {
  terms_.push_back({{}, field_.one()});
}

std::size_t SlotTensor::position(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("slot '" + name + "' does not exist");
  return static_cast<std::size_t>(it - names_.begin());
}

SlotTensor& SlotTensor::put(std::string name, std::size_t dim, Index basis) {
  if (basis >= dim) throw DimensionMismatch("basis index outside slot dimension");
  return put(std::move(name), dim, basis_vector(field_, basis));
}

SlotTensor& SlotTensor::put(std::string name, std::size_t dim, const SparseVec& vector) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
    throw Error("slot '" + name + "' already exists");
  }
  names_.push_back(std::move(name));
  dims_.push_back(dim);
  std::vector<Entry> next;
  next.reserve(terms_.size() * vector.size());
  for (const auto& e : terms_) {
    for (const auto& t : vector) {
      if (t.index >= dim) throw DimensionMismatch("vector index outside slot dimension");
      Entry n{e.key, e.coeff * t.coeff};
      n.key.push_back(t.index);
      next.push_back(std::move(n));
    }
  }
  terms_ = std::move(next);
  canonicalize();
  return *this;
}

SlotTensor& SlotTensor::split(const std::string& name, const LinMap& delta,
                              std::initializer_list<std::string> parts) {
  std::vector<std::string> names(parts);
  if (names.empty()) throw Error("split needs at least one part");
  const std::size_t dim = dims_[position(name)];
  if (delta.domain_dim() != dim || delta.codomain_dim() != dim * dim) {
    throw DimensionMismatch("split: comultiplication does not match slot '" + name + "'");
  }
  if (names.size() == 1) {
    names_[position(name)] = names[0];
    return *this;
  }
  std::string current = name;
  for (std::size_t k = 0; k + 1 < names.size(); ++k) {
    std::string rest = (k + 2 == names.size()) ? names[k + 1] : "\x01split:" + name + std::to_string(k);
    apply_impl(delta, {current}, {{names[k], dim}, {rest, dim}});
    current = rest;
  }
  return *this;
}

SlotTensor& SlotTensor::apply(const LinMap& f, std::initializer_list<std::string> inputs,
                              std::string output) {
  apply_impl(f, std::vector<std::string>(inputs), {{std::move(output), f.codomain_dim()}});
  return *this;
}

SlotTensor& SlotTensor::apply(const LinMap& f, std::initializer_list<std::string> inputs,
                              std::initializer_list<std::pair<std::string, std::size_t>> outputs) {
  apply_impl(f, std::vector<std::string>(inputs),
             std::vector<std::pair<std::string, std::size_t>>(outputs));
  return *this;
}

SlotTensor& SlotTensor::contract(const LinMap& form, std::initializer_list<std::string> inputs) {
  apply_impl(form, std::vector<std::string>(inputs), {});
  return *this;
}

void SlotTensor::apply_impl(const LinMap& f, const std::vector<std::string>& inputs,
                            const std::vector<std::pair<std::string, std::size_t>>& outputs) {
  std::vector<std::size_t> in_pos;
  std::size_t in_dim = 1;
  for (const auto& n : inputs) {
    in_pos.push_back(position(n));
    in_dim *= dims_[in_pos.back()];
  }
  std::size_t out_dim = 1;
  for (const auto& [n, d] : outputs) out_dim *= d;
  if (in_dim != f.domain_dim() || out_dim != f.codomain_dim()) {
    throw DimensionMismatch("apply: map of shape " + std::to_string(f.codomain_dim()) + "x" +
                            std::to_string(f.domain_dim()) + " does not fit slots (" +
                            std::to_string(out_dim) + "x" + std::to_string(in_dim) + ")");
  }
  std::vector<bool> consumed(names_.size(), false);
  for (std::size_t p : in_pos) {
    if (consumed[p]) throw Error("apply: slot used twice");
    consumed[p] = true;
  }

  std::vector<std::string> next_names;
  std::vector<std::size_t> next_dims;
  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < names_.size(); ++p) {
    if (consumed[p]) continue;
    kept.push_back(p);
    next_names.push_back(names_[p]);
    next_dims.push_back(dims_[p]);
  }
  for (const auto& [n, d] : outputs) {
    if (std::find(next_names.begin(), next_names.end(), n) != next_names.end()) {
      throw Error("slot '" + n + "' already exists");
    }
    next_names.push_back(n);
    next_dims.push_back(d);
  }

  std::vector<Entry> next;
  next.reserve(terms_.size());
  std::vector<Index> digits(outputs.size());
  for (const auto& e : terms_) {
    Index idx = 0;
    for (std::size_t p : in_pos) idx = static_cast<Index>(idx * dims_[p] + e.key[p]);
    for (const auto& t : f.column(idx)) {
      Index rest = t.index;
      for (std::size_t k = outputs.size(); k-- > 0;) {
        digits[k] = static_cast<Index>(rest % outputs[k].second);
        rest /= static_cast<Index>(outputs[k].second);
      }
      Entry n;
      n.key.reserve(next_names.size());
      for (std::size_t p : kept) n.key.push_back(e.key[p]);
      n.key.insert(n.key.end(), digits.begin(), digits.end());
      n.coeff = e.coeff * t.coeff;
      next.push_back(std::move(n));
    }
  }
  names_ = std::move(next_names);
  dims_ = std::move(next_dims);
  terms_ = std::move(next);
  canonicalize();
}

void SlotTensor::canonicalize() {
  if (terms_.size() <= 1) {
    if (terms_.size() == 1 && terms_[0].coeff.is_zero()) terms_.clear();
    return;
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Entry acc = std::move(terms_[i]);
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].key == acc.key; ++j) acc.coeff += terms_[j].coeff;
    if (!acc.coeff.is_zero()) terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
}

SparseVec SlotTensor::collect(std::initializer_list<std::string> order) const {
  std::vector<std::string> names(order);
  if (names.size() != names_.size()) {
    throw Error("collect: must name every remaining slot");
  }
  std::vector<std::size_t> pos;
  for (const auto& n : names) pos.push_back(position(n));
  SparseVec out;
  out.reserve(terms_.size());
  for (const auto& e : terms_) {
    Index idx = 0;
    for (std::size_t p : pos) idx = static_cast<Index>(idx * dims_[p] + e.key[p]);
    out.push_back({idx, e.coeff});
  }
  normalize(out);
  return out;
}

Scalar SlotTensor::value() const {
  if (!names_.empty()) throw Error("value: slots remain");
  return terms_.empty() ? field_.zero() : terms_[0].coeff;
}

}  // namespace uprod
