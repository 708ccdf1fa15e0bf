#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opensys {

/// A finite set {0, ..., size-1}. Labels are display metadata only: two sets
/// are equal iff their sizes agree.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t size) : size_(size) {}
  /// Throws InvalidValue when the labels are not pairwise distinct.
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool has_labels() const { return labels_.has_value(); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  /// Label of element k, or its decimal index when the set is unlabelled.
  std::string label(std::size_t k) const;
  /// Index of the element carrying `name`, if any.
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

/// A total function between finite sets, stored as its table of images.
class FinFunction {
 public:
  FinFunction() = default;
  /// Throws InvalidValue if the table length or an entry is out of range.
  FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> table);
  /// Unlabelled convenience form.
  FinFunction(std::size_t cod_size, std::vector<std::size_t> table);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t k) const { return table_[k]; }
  std::size_t size() const { return table_.size(); }

  /// Same table, relabelled domain/codomain (sizes must agree).
  FinFunction with_sets(FinSet dom, FinSet cod) const;

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

struct Coproduct {
  FinSet sum;
  FinFunction inl;
  FinFunction inr;
};

FinFunction identity(const FinSet& x);
/// The unique map out of the empty set.
FinFunction initial_map(const FinSet& x);
/// g after f. Throws CodomainMismatch when f.cod() != g.dom().
FinFunction compose(const FinFunction& f, const FinFunction& g);
Coproduct coproduct(const FinSet& x, const FinSet& y);
/// [f, g] : dom f + dom g -> cod. Throws CodomainMismatch.
FinFunction copair(const FinFunction& f, const FinFunction& g);
/// f + g : dom f + dom g -> cod f + cod g.
FinFunction coproduct_map(const FinFunction& f, const FinFunction& g);
/// The symmetry X + Y -> Y + X.
FinFunction swap_map(const FinSet& x, const FinSet& y);
/// Quotient of cod by the equivalence generated by f(k) ~ g(k). Classes are
/// numbered by least member.
FinFunction coequalizer(const FinFunction& f, const FinFunction& g);

struct Pushout {
  FinFunction left;   // N -> P
  FinFunction right;  // M -> P
};

/// Pushout of N <-f- A -g-> M. Throws DomainMismatch.
Pushout pushout(const FinFunction& f, const FinFunction& g);

struct EpiMono {
  FinFunction epi;
  FinFunction mono;
};

/// f = mono o epi, image ordered by first preimage.
EpiMono epi_mono_factor(const FinFunction& f);

bool is_epi(const FinFunction& f);
bool is_mono(const FinFunction& f);
bool is_iso(const FinFunction& f);
/// Inverse of a bijection. Throws InvalidValue if f is not iso.
FinFunction inverse(const FinFunction& f);

/// Every function from a set of size n to a set of size m, in lexicographic
/// table order.
std::vector<FinFunction> all_functions(std::size_t n, std::size_t m);

/// "[1 0 1] : 3 -> 2"
std::string describe(const FinFunction& f);

}  // namespace opensys
