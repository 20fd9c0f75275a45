#pragma once

#include "magmoid/checks.hpp"

namespace magmoid {

// One =_t congruence class of parallel morphisms; members are sorted so
// members.front() is the canonical (lexicographically least) representative.
struct QuotientClass {
  std::vector<Mor> members;
  const Mor& representative() const { return members.front(); }
};

struct QuotientHom {
  std::string dom, cod;
  std::vector<QuotientClass> classes;
};

// The extensional quotient C_{=t}: same objects, parallel morphisms
// identified when they agree on every t-point. The projection is full and
// bijective on objects by construction; building the quotient verifies that
// the congruence respects composition, that Hom(t,X) = Hom(Qt,QX), and that
// Hom(Qt,-) is faithful on the quotient.
class QuotientCategory {
public:
  QuotientCategory(CategoryPtr base, std::vector<QuotientHom> homs, CheckReport verification);

  const Category& base() const { return *base_; }
  const std::vector<QuotientHom>& homs() const { return homs_; }
  const QuotientHom& hom_classes(std::string_view dom, std::string_view cod) const;
  // index of the class containing m
  std::size_t class_of(const Mor& m) const;
  const CheckReport& verification() const { return verification_; }

private:
  CategoryPtr base_;
  std::vector<QuotientHom> homs_;
  CheckReport verification_;
};

QuotientCategory concrete_quotient(CategoryPtr base, const Budget& budget = {});

// For a cartesian base (both projections available): checks that the product
// descends to the quotient and is again a categorical product on classes.
CheckReport check_quotient_cartesian(const QuotientCategory& q, const Budget& budget = {});

} // namespace magmoid
