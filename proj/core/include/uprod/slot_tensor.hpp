#ifndef UPROD_SLOT_TENSOR_HPP
#define UPROD_SLOT_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "uprod/linear.hpp"

namespace uprod {

/// A sparse element of V_1 (x) ... (x) V_n whose tensor factors are named.
///
/// This is the evaluator for Sweedler-notation identities: start from a tuple
/// of basis vectors, split slots with a comultiplication, feed slots into
/// structure maps, and finally read the result in a chosen slot order. For
/// example, `h_(1) |> a_(1) (x) h_(2) <| a_(2)` evaluated on (h, a) is
///
///     SlotTensor t(field);
///     t.put("h", dim_h, h).put("a", dim_a, a)
///      .split("h", delta_h, {"h1", "h2"}).split("a", delta_a, {"a1", "a2"})
///      .apply(lact, {"h1", "a1"}, "x").apply(ract, {"h2", "a2"}, "y");
///     SparseVec v = t.collect({"x", "y"});
///
/// Inputs of a map are flattened row-major in the order given, matching
/// tensor_space. Iterated splits are (id (x) delta) o delta.
class SlotTensor {
 public:
  /// The scalar 1 with no slots.
  explicit SlotTensor(Field field);

  /// Tensors with the basis vector e_basis in a new slot.
  SlotTensor& put(std::string name, std::size_t dim, Index basis);
  /// Tensors with `vector` (coordinates in a space of dimension dim).
  SlotTensor& put(std::string name, std::size_t dim, const SparseVec& vector);

  /// Replaces slot `name` by parts.size() slots via iterated comultiplication.
  SlotTensor& split(const std::string& name, const LinMap& delta,
                    std::initializer_list<std::string> parts);

  /// Consumes the input slots and writes f(inputs) into a new slot `output`.
  SlotTensor& apply(const LinMap& f, std::initializer_list<std::string> inputs,
                    std::string output);
  /// General form: the codomain is split row-major into the named outputs.
  /// With no outputs, f must land in the ground field and is contracted.
  SlotTensor& apply(const LinMap& f, std::initializer_list<std::string> inputs,
                    std::initializer_list<std::pair<std::string, std::size_t>> outputs);
  /// Contracts the inputs with a linear form (codomain of dimension 1).
  SlotTensor& contract(const LinMap& form, std::initializer_list<std::string> inputs);

  /// Coordinates in the row-major tensor of the named slots, which must be
  /// exactly the remaining slots.
  SparseVec collect(std::initializer_list<std::string> order) const;
  /// Value when no slots remain.
  Scalar value() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

 private:
  struct Entry {
    std::vector<Index> key;
    Scalar coeff;
  };

  std::size_t position(const std::string& name) const;
  void apply_impl(const LinMap& f, const std::vector<std::string>& inputs,
                  const std::vector<std::pair<std::string, std::size_t>>& outputs);
  void canonicalize();

  Field field_;
  std::vector<std::string> names_;
  std::vector<std::size_t> dims_;
  std::vector<Entry> terms_;
};

}  // namespace uprod

#endif  // UPROD_SLOT_TENSOR_HPP
