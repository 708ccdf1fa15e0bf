#include "opensys/finset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "opensys/error.hpp"

namespace opensys {

FinSet::FinSet(std::vector<std::string> labels) : size_(labels.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidValue("duplicate label '" + l + "'");
  }
  labels_ = std::move(labels);
}

std::string FinSet::label(std::size_t k) const {
  if (labels_) return (*labels_)[k];
  return std::to_string(k);
}

std::optional<std::size_t> FinSet::find(const std::string& name) const {
  if (!labels_) return std::nullopt;
  auto it = std::find(labels_->begin(), labels_->end(), name);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

FinFunction::FinFunction(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw InvalidValue("function table has " + std::to_string(table_.size()) +
                       " entries for a domain of size " + std::to_string(dom_.size()));
  }
  for (std::size_t v : table_) {
    if (v >= cod_.size()) {
      throw InvalidValue("function entry " + std::to_string(v) +
                         " outside codomain of size " + std::to_string(cod_.size()));
    }
  }
}

FinFunction::FinFunction(std::size_t cod_size, std::vector<std::size_t> table)
    : dom_(table.size()), cod_(cod_size), table_(std::move(table)) {
  for (std::size_t v : table_) {
    if (v >= cod_.size()) {
      throw InvalidValue("function entry " + std::to_string(v) + " outside codomain of size " +
                         std::to_string(cod_.size()));
    }
  }
}

FinFunction FinFunction::with_sets(FinSet dom, FinSet cod) const {
  return FinFunction(std::move(dom), std::move(cod), table_);
}

FinFunction identity(const FinSet& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinFunction(x, x, std::move(t));
}

FinFunction initial_map(const FinSet& x) { return FinFunction(FinSet(0), x, {}); }

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod() == g.dom())) {
    throw CodomainMismatch("cannot compose: codomain size " + std::to_string(f.cod().size()) +
                           " vs domain size " + std::to_string(g.dom().size()));
  }
  std::vector<std::size_t> t(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) t[k] = g(f(k));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

namespace {

FinSet sum_set(const FinSet& x, const FinSet& y) {
  if (!x.has_labels() && !y.has_labels()) return FinSet(x.size() + y.size());
  std::vector<std::string> labels;
  std::unordered_set<std::string> used;
  labels.reserve(x.size() + y.size());
  auto push = [&](std::string l) {
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(std::move(l));
  };
  for (std::size_t k = 0; k < x.size(); ++k) push(x.label(k));
  for (std::size_t k = 0; k < y.size(); ++k) push(y.label(k));
  return FinSet(std::move(labels));
}

// Union-find over {0..n-1}; the root of a class is always its least member.
class Classes {
 public:
  explicit Classes(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Coproduct coproduct(const FinSet& x, const FinSet& y) {
  FinSet s = sum_set(x, y);
  std::vector<std::size_t> l(x.size()), r(y.size());
  std::iota(l.begin(), l.end(), std::size_t{0});
  std::iota(r.begin(), r.end(), x.size());
  FinFunction inl(x, s, std::move(l));
  FinFunction inr(y, s, std::move(r));
  return {std::move(s), std::move(inl), std::move(inr)};
}

FinFunction copair(const FinFunction& f, const FinFunction& g) {
  if (!(f.cod() == g.cod())) {
    throw CodomainMismatch("copair needs a shared codomain (" + std::to_string(f.cod().size()) +
                           " vs " + std::to_string(g.cod().size()) + ")");
  }
  std::vector<std::size_t> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFunction(sum_set(f.dom(), g.dom()), f.cod(), std::move(t));
}

FinFunction coproduct_map(const FinFunction& f, const FinFunction& g) {
  std::vector<std::size_t> t = f.table();
  for (std::size_t v : g.table()) t.push_back(v + f.cod().size());
  return FinFunction(sum_set(f.dom(), g.dom()), sum_set(f.cod(), g.cod()), std::move(t));
}

FinFunction swap_map(const FinSet& x, const FinSet& y) {
  std::vector<std::size_t> t(x.size() + y.size());
  for (std::size_t k = 0; k < x.size(); ++k) t[k] = y.size() + k;
  for (std::size_t k = 0; k < y.size(); ++k) t[x.size() + k] = k;
  return FinFunction(sum_set(x, y), sum_set(y, x), std::move(t));
}

FinFunction coequalizer(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom())) throw DomainMismatch("coequalizer legs have different domains");
  if (!(f.cod() == g.cod())) throw CodomainMismatch("coequalizer legs have different codomains");
  const std::size_t n = f.cod().size();
  Classes classes(n);
  for (std::size_t k = 0; k < f.size(); ++k) classes.unite(f(k), g(k));
  std::vector<std::size_t> index(n, n), table(n);
  std::vector<std::string> labels;
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = classes.find(v);
    if (index[root] == n) {
      index[root] = count++;
      labels.push_back(f.cod().label(v));
    }
    table[v] = index[root];
  }
  FinSet quotient = f.cod().has_labels() ? FinSet(std::move(labels)) : FinSet(count);
  return FinFunction(f.cod(), std::move(quotient), std::move(table));
}

Pushout pushout(const FinFunction& f, const FinFunction& g) {
  if (!(f.dom() == g.dom())) {
    throw DomainMismatch("pushout legs do not share a foot (" + std::to_string(f.dom().size()) +
                         " vs " + std::to_string(g.dom().size()) + ")");
  }
  Coproduct nm = coproduct(f.cod(), g.cod());
  FinFunction q = coequalizer(compose(f, nm.inl), compose(g, nm.inr));
  return {compose(nm.inl, q), compose(nm.inr, q)};
}

EpiMono epi_mono_factor(const FinFunction& f) {
  const std::size_t n = f.cod().size();
  std::vector<std::size_t> slot(n, n), epi(f.size()), mono;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::size_t y = f(k);
    if (slot[y] == n) {
      slot[y] = mono.size();
      mono.push_back(y);
    }
    epi[k] = slot[y];
  }
  FinSet image(mono.size());
  if (f.cod().has_labels()) {
    std::vector<std::string> labels;
    for (std::size_t y : mono) labels.push_back(f.cod().label(y));
    image = FinSet(std::move(labels));
  }
  return {FinFunction(f.dom(), image, std::move(epi)), FinFunction(image, f.cod(), std::move(mono))};
}

bool is_epi(const FinFunction& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t v : f.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const FinFunction& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t v : f.table()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_iso(const FinFunction& f) { return f.dom().size() == f.cod().size() && is_mono(f); }

FinFunction inverse(const FinFunction& f) {
  if (!is_iso(f)) throw InvalidValue("inverse of a non-bijective function");
  std::vector<std::size_t> t(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) t[f(k)] = k;
  return FinFunction(f.cod(), f.dom(), std::move(t));
}

std::vector<FinFunction> all_functions(std::size_t n, std::size_t m) {
  std::vector<FinFunction> out;
  if (n == 0) {
    out.emplace_back(m, std::vector<std::size_t>{});
    return out;
  }
  if (m == 0) return out;
  std::vector<std::size_t> t(n, 0);
  while (true) {
    out.emplace_back(m, t);
    std::size_t k = n;
    while (true) {
      if (k == 0) return out;
      --k;
      if (++t[k] < m) break;
      t[k] = 0;
    }
  }
}

std::string describe(const FinFunction& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.size(); ++k) out += (k ? " " : "") + std::to_string(f(k));
  return out + "] : " + std::to_string(f.dom().size()) + " -> " + std::to_string(f.cod().size());
}

}  // namespace opensys
