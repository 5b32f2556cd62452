#include <gtest/gtest.h>

#include "support/helpers.hpp"

namespace sk = stablekernel;
using helpers::F;
using helpers::T;

namespace {

sk::Formula a(const char* name) { return sk::Formula::atom(name); }

}  // namespace

TEST(Sugar, TopIsBottomImpliesBottom) {
  EXPECT_EQ(sk::top(), sk::Formula::implies(sk::Formula::bottom(), sk::Formula::bottom()));
  EXPECT_TRUE(sk::top().is_top());
}

TEST(Sugar, NegationIsImplicationToBottom) {
  EXPECT_EQ(sk::neg(a("p")), sk::Formula::implies(a("p"), sk::Formula::bottom()));
}

TEST(Sugar, BiconditionalIsTwoImplications) {
  EXPECT_EQ(sk::iff(a("p"), a("q")),
            sk::Formula::conj(sk::Formula::implies(a("p"), a("q")), sk::Formula::implies(a("q"), a("p"))));
}

TEST(Atoms, InternedByName) {
  EXPECT_EQ(sk::Atom("p"), sk::Atom("p"));
  EXPECT_NE(sk::Atom("p"), sk::Atom("q"));
  EXPECT_LT(sk::Atom("p"), sk::Atom("q"));
}

TEST(Atoms, RejectsBadNames) {
  EXPECT_THROW(sk::Atom("P"), std::invalid_argument);
  EXPECT_THROW(sk::Atom(""), std::invalid_argument);
  EXPECT_THROW(sk::Atom("not"), std::invalid_argument);
  EXPECT_NO_THROW(sk::Atom("x_1Y"));
}

TEST(AtomsOf, Examples) {
  EXPECT_EQ(sk::atoms_of(T("p :- not q. q :- not p.")), helpers::M("p,q"));
  EXPECT_EQ(sk::atoms_of(T("q :- sum{p = -1; q = 1} >= 0.")), helpers::M("p,q"));
  EXPECT_EQ(sk::atoms_of(sk::Theory{}), sk::AtomSet{});
}

TEST(Occurrences, ParityOfAntecedents) {
  const auto f = F("(p -> r) -> q");
  const auto q = sk::occurrences(f, sk::Atom("q"));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].kind, sk::PolarityKind::StrictlyPositive);
  const auto p = sk::occurrences(f, sk::Atom("p"));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].kind, sk::PolarityKind::Positive);
  EXPECT_TRUE(p[0].is_positive());
  EXPECT_FALSE(p[0].is_strictly_positive());
  const auto r = sk::occurrences(f, sk::Atom("r"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].kind, sk::PolarityKind::Negative);
}

TEST(Occurrences, NegationScope) {
  const auto occ = sk::occurrences(F("not p | p"), sk::Atom("p"));
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_TRUE(occ[0].in_negation_scope);
  EXPECT_FALSE(occ[1].in_negation_scope);
}

TEST(Occurrences, RejectsAggregates) {
  EXPECT_THROW(sk::occurrences(F("sum{p = 1} >= 1"), sk::Atom("p")), sk::AggregatePresent);
}

TEST(HeadAtoms, Examples) {
  EXPECT_EQ(sk::head_atoms(T("(p -> q) | (q -> p). p.")), helpers::M("p,q"));
  EXPECT_EQ(sk::head_atoms(T("q :- sum{p = -1; q = 1} >= 0.")), helpers::M("q"));
  EXPECT_EQ(sk::head_atoms(T("not (a & b).")), sk::AtomSet{});
}

TEST(Classify, Examples) {
  EXPECT_EQ(sk::classify(T("p :- not q. q :- not p.")), sk::ProgramClass::Traditional);
  EXPECT_EQ(sk::classify(T("(p -> q) | (q -> p). p.")), sk::ProgramClass::GeneralTheory);
  EXPECT_EQ(sk::classify(T("p | q.")), sk::ProgramClass::Disjunctive);
}

TEST(Classify, NestedClasses) {
  EXPECT_EQ(sk::classify(T("p :- not not p.")), sk::ProgramClass::NondisjunctiveNested);
  EXPECT_EQ(sk::classify(T("p | not q :- r & not (s | t).")), sk::ProgramClass::NestedExpressions);
  EXPECT_EQ(sk::classify(T("bot :- p & q.")), sk::ProgramClass::Disjunctive);
  EXPECT_EQ(sk::classify(T("p :- sum{q = 1} >= 1.")), sk::ProgramClass::GeneralTheory);
  EXPECT_EQ(sk::classify(sk::Theory{}), sk::ProgramClass::Traditional);
}

TEST(Classify, InclusionOrder) {
  using C = sk::ProgramClass;
  EXPECT_TRUE(sk::class_included(C::Traditional, C::Disjunctive));
  EXPECT_TRUE(sk::class_included(C::Disjunctive, C::NestedExpressions));
  EXPECT_TRUE(sk::class_included(C::NestedExpressions, C::GeneralTheory));
  EXPECT_TRUE(sk::class_included(C::Traditional, C::NondisjunctiveNested));
  EXPECT_FALSE(sk::class_included(C::Disjunctive, C::NondisjunctiveNested));
  EXPECT_FALSE(sk::class_included(C::GeneralTheory, C::NestedExpressions));
}

TEST(Theory, DeduplicatesAndSorts) {
  const auto t = T("q. p. q.");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(sk::print_theory(t), "p.\nq.\n");
}
