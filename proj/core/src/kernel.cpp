#include "magmoid/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace magmoid {

FiniteSet::FiniteSet(std::string id, std::vector<std::string> elements)
    : id_(std::move(id)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end())
    throw DuplicateAssignment("set '" + id_ + "' has duplicate element '" + *dup + "'");
}

bool FiniteSet::contains(std::string_view label) const {
  return index_of(label).has_value();
}

std::optional<std::size_t> FiniteSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
  if (it == elements_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

FiniteFunction::FiniteFunction(FiniteSet dom, FiniteSet cod,
                               std::vector<std::uint32_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw MissingAssignment("table size " + std::to_string(table_.size()) +
                            " does not cover domain '" + dom_.id() + "' of size " +
                            std::to_string(dom_.size()));
  for (std::uint32_t v : table_)
    if (v >= cod_.size())
      throw ForeignElement("index " + std::to_string(v) + " outside codomain '" +
                           cod_.id() + "'");
}

FiniteFunction FiniteFunction::from_pairs(
    const FiniteSet& dom, const FiniteSet& cod,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::optional<std::uint32_t>> slots(dom.size());
  for (const auto& [x, y] : pairs) {
    auto xi = dom.index_of(x);
    if (!xi)
      throw ForeignElement("'" + x + "' is not an element of domain '" + dom.id() + "'");
    auto yi = cod.index_of(y);
    if (!yi)
      throw ForeignElement("image '" + y + "' is not an element of codomain '" +
                           cod.id() + "'");
    if (slots[*xi])
      throw DuplicateAssignment("element '" + x + "' assigned twice");
    slots[*xi] = static_cast<std::uint32_t>(*yi);
  }
  std::vector<std::uint32_t> table(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!slots[i])
      throw MissingAssignment("element '" + dom.element(i) + "' of domain '" +
                              dom.id() + "' is unassigned");
    table[i] = *slots[i];
  }
  return FiniteFunction(dom, cod, std::move(table));
}

const std::string& FiniteFunction::apply(std::string_view x) const {
  auto i = dom_.index_of(x);
  if (!i)
    throw ForeignElement("'" + std::string(x) + "' is not in domain '" + dom_.id() + "'");
  return cod_.element(table_[*i]);
}

bool FiniteFunction::is_identity() const {
  if (dom_ != cod_) return false;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

bool FiniteFunction::is_injective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (std::uint32_t v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FiniteFunction::is_surjective() const {
  std::vector<bool> seen(cod_.size(), false);
  for (std::uint32_t v : table_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool FiniteFunction::table_less(const FiniteFunction& a, const FiniteFunction& b) {
  return a.table_ < b.table_;
}

FiniteFunction identity_function(const FiniteSet& s) {
  std::vector<std::uint32_t> table(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) table[i] = static_cast<std::uint32_t>(i);
  return FiniteFunction(s, s, std::move(table));
}

FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f) {
  if (f.cod() != g.dom())
    throw CompositionMismatch("cod '" + f.cod().id() + "' of the first factor differs from dom '" +
                              g.dom().id() + "' of the second");
  std::vector<std::uint32_t> table(f.dom().size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = g.apply_index(f.apply_index(i));
  return FiniteFunction(f.dom(), g.cod(), std::move(table));
}

std::uint64_t function_count(const FiniteSet& dom, const FiniteSet& cod,
                             const Budget& budget) {
  if (dom.empty()) return 1;
  if (cod.empty()) return 0;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    n *= cod.size();
    if (n > budget.enumeration)
      throw SizeLimitExceeded("|" + cod.id() + "|^|" + dom.id() + "| exceeds the enumeration cap " +
                              std::to_string(budget.enumeration));
  }
  return n;
}

std::vector<FiniteFunction> enumerate_functions(const FiniteSet& dom,
                                                const FiniteSet& cod,
                                                const Budget& budget) {
  std::uint64_t n = function_count(dom, cod, budget);
  std::vector<FiniteFunction> out;
  if (n == 0) return out;
  out.reserve(n);
  std::vector<std::uint32_t> table(dom.size(), 0);
  while (true) {
    out.emplace_back(dom, cod, table);
    // advance the table as a base-|cod| counter, least significant last
    std::size_t i = table.size();
    while (i > 0) {
      --i;
      if (++table[i] < cod.size()) break;
      table[i] = 0;
      if (i == 0) return out;
    }
    if (table.empty()) return out;
  }
}

std::string describe(const FiniteFunction& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (i) os << ", ";
    os << f.dom().element(i) << "->" << f.cod().element(f.apply_index(i));
  }
  os << "}";
  return os.str();
}

std::string pair_label(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

} // namespace magmoid
