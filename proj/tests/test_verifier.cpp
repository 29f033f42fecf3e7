#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "toric/verifier.hpp"

using namespace toric;

namespace {

IntMatrix cols(std::initializer_list<std::initializer_list<int>> cs) {
  const Index n = static_cast<Index>(cs.begin()->size());
  IntMatrix m(n, static_cast<Index>(cs.size()));
  Index j = 0;
  for (const auto& c : cs) {
    Index i = 0;
    for (int x : c) m(i++, j) = x;
    ++j;
  }
  return m;
}

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

Cone a1() { return Cone::from_rays(cols({{1, 0}, {1, 2}})); }

Cone quadric() {
  return Cone::from_rays(cols({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

Cone codim2() {
  return Cone::from_rays(cols({{1, 0, 0}, {0, 1, 0}, {0, 1, 2}}));
}

const VerdictEntry* at(const VerificationReport& r, int p, int i) {
  for (const auto& e : r.entries)
    if (e.p == p && e.i == i) return &e;
  return nullptr;
}

bool mentions(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verdict over the quadratic cone") {
  Cone sigma = a1();
  ComplexContext ctx = make_context(sigma, resolve(sigma, true));
  VerificationReport rep = verify(ctx, 2, 6);

  CHECK(rep.p_max == 2);
  CHECK(rep.base_simplicial);
  CHECK(!rep.base_smooth);
  CHECK(rep.singular_codim == 2);
  CHECK(!rep.trivial_refinement);
  CHECK(rep.fan_smooth);
  CHECK(rep.fan_strong);
  CHECK(rep.entries.size() == 6);

  for (int i = 1; i <= 2; ++i) {
    const VerdictEntry* e = at(rep, 0, i);
    REQUIRE(e);
    CHECK(e->claim == Claim::MustVanish);
    CHECK(e->clause == "structure-sheaf");
    CHECK(e->status == "confirmed-structural");
  }
  for (int i = 1; i <= 2; ++i) {
    const VerdictEntry* e = at(rep, 1, i);
    REQUIRE(e);
    CHECK(e->claim == Claim::MustVanish);
    CHECK(e->clause == "forms-below-center");
    CHECK(e->status == "confirmed-on-box");
  }

  const VerdictEntry* center = at(rep, 2, 1);
  REQUIRE(center);
  CHECK(center->claim == Claim::MustNotVanish);
  CHECK(center->clause == "center-degree");
  CHECK(center->status == "confirmed");
  REQUIRE(center->witness_degree.has_value());
  CHECK(*center->witness_degree == vec({0, 0}));
  CHECK(center->witness_dim == 1);

  const VerdictEntry* above = at(rep, 2, 2);
  REQUIRE(above);
  CHECK(above->claim == Claim::MustVanish);
  CHECK(above->clause == "beyond-form-degree");
  CHECK(above->status == "confirmed-on-box");

  REQUIRE(rep.crosschecks.size() == 2);
  for (const CrosscheckRecord& r : rep.crosschecks) {
    CHECK(r.ran);
    CHECK(r.ok);
    CHECK(r.degrees > 0);
    CHECK(r.comparisons > 0);
  }

  CHECK(rep.mop.ran);
  CHECK(rep.mop.degree == 1);
  CHECK(rep.mop.total == 0);
  CHECK(rep.mop.ok);
  CHECK(rep.ok);
}

TEST_CASE("verdict over the codimension-two wall") {
  Cone sigma = codim2();
  ComplexContext ctx = make_context(sigma, resolve(sigma, true));
  VerificationReport rep = verify(ctx, 3, 3);

  CHECK(rep.singular_codim == 2);
  CHECK(rep.entries.size() == 12);

  for (int i = 1; i <= 3; ++i) {
    const VerdictEntry* e = at(rep, 1, i);
    REQUIRE(e);
    CHECK(e->clause == "forms-below-center");
    CHECK(e->status == "confirmed-on-box");
  }

  for (int p = 2; p <= 3; ++p) {
    const VerdictEntry* e = at(rep, p, 1);
    REQUIRE(e);
    CHECK(e->claim == Claim::MustNotVanish);
    CHECK(e->status == "confirmed");
    REQUIRE(e->witness_degree.has_value());
    CHECK(*e->witness_degree == vec({1, 0, 0}));
    CHECK(e->witness_dim == 1);
  }

  const VerdictEntry* window = at(rep, 3, 2);
  REQUIRE(window);
  CHECK(window->claim == Claim::NoClaim);
  CHECK(window->clause == "middle-window");
  CHECK(window->status == "no-claim");
  CHECK(mentions(window->note, "observed box total"));

  const VerdictEntry* above = at(rep, 3, 3);
  REQUIRE(above);
  CHECK(above->claim == Claim::MustVanish);
  CHECK(above->status == "confirmed-on-box");

  REQUIRE(rep.crosschecks.size() == 3);
  for (const CrosscheckRecord& r : rep.crosschecks) {
    CHECK(r.ran);
    CHECK(r.ok);
  }
  CHECK(rep.mop.ran);
  CHECK(rep.mop.degree == 2);
  CHECK(rep.mop.ok);
  CHECK(rep.ok);
}

TEST_CASE("verdict over a non-simplicial base") {
  Cone sigma = quadric();
  ComplexContext ctx = make_context(sigma, resolve(sigma, true));
  VerificationReport rep = verify(ctx, 3, 2);

  CHECK(!rep.base_simplicial);
  CHECK(rep.fan_smooth);
  CHECK(rep.fan_strong);

  const VerdictEntry* center = at(rep, 1, 1);
  REQUIRE(center);
  CHECK(center->claim == Claim::MustNotVanish);
  CHECK(center->clause == "one-form-center");
  CHECK(center->status == "confirmed");
  REQUIRE(center->witness_degree.has_value());
  CHECK(*center->witness_degree == vec({0, 0, 0}));
  CHECK(center->witness_dim == 1);

  for (int i = 2; i <= 3; ++i) {
    const VerdictEntry* e = at(rep, 1, i);
    REQUIRE(e);
    CHECK(e->claim == Claim::MustVanish);
    CHECK(e->clause == "one-form-tail");
    CHECK(e->status == "confirmed-structural");
  }
  for (int p = 2; p <= 3; ++p)
    for (int i = 1; i <= 3; ++i) {
      const VerdictEntry* e = at(rep, p, i);
      REQUIRE(e);
      CHECK(e->claim == Claim::NoClaim);
      CHECK(e->clause == "no-theorem");
      CHECK(e->status == "no-claim");
      CHECK(!mentions(e->note, "observed box total"));
    }

  for (const CrosscheckRecord& r : rep.crosschecks) {
    CHECK(!r.ran);
    CHECK(r.ok);
    CHECK(mentions(r.message, "simplicial base"));
  }
  CHECK(rep.mop.ran);
  CHECK(rep.mop.degree == 2);
  CHECK(rep.mop.ok);
  CHECK(rep.ok);

  VerificationReport observed = verify(ctx, 2, 2, /*experimental=*/true);
  const VerdictEntry* attached = at(observed, 2, 1);
  REQUIRE(attached);
  CHECK(attached->status == "no-claim");
  CHECK(mentions(attached->note, "observed box total"));
}

TEST_CASE("verdict over a trivial refinement") {
  Cone octant = Cone::from_rays(cols({{1, 0}, {0, 1}}));
  ComplexContext ctx = make_context(octant, face_fan(octant));
  VerificationReport rep = verify(ctx, 2, 4);

  CHECK(rep.trivial_refinement);
  CHECK(rep.base_smooth);
  for (const VerdictEntry& e : rep.entries) {
    CHECK(e.claim == Claim::MustVanish);
    CHECK(e.clause == "identity-refinement");
    CHECK(e.status == "confirmed-structural");
  }
  for (const CrosscheckRecord& r : rep.crosschecks) {
    CHECK(!r.ran);
    CHECK(mentions(r.message, "trivial"));
  }
  CHECK(!rep.mop.ran);
  CHECK(rep.mop.ok);
  CHECK(rep.ok);
}

TEST_CASE("verdict over a non-strong refinement") {
  Cone sigma = codim2();
  Fan fan = star_subdivide(resolve(sigma, true), vec({1, 1, 0}));
  ComplexContext ctx = make_context(sigma, fan);
  CHECK(!ctx.profile.strong);

  VerificationReport rep = verify(ctx, 2, 2);
  CHECK(!rep.fan_strong);
  CHECK(rep.fan_smooth);
  for (int p = 1; p <= 2; ++p)
    for (int i = 1; i <= 3; ++i) {
      const VerdictEntry* e = at(rep, p, i);
      REQUIRE(e);
      CHECK(e->claim == Claim::NoClaim);
      CHECK(e->clause == "non-strong-refinement");
      CHECK(e->status == "no-claim");
    }
  const VerdictEntry* functions = at(rep, 0, 1);
  REQUIRE(functions);
  CHECK(functions->claim == Claim::MustVanish);
  CHECK(functions->status == "confirmed-structural");

  // The exactness and shift comparisons hold for any simplicial pair.
  for (const CrosscheckRecord& r : rep.crosschecks) {
    CHECK(r.ran);
    CHECK(r.ok);
  }
  CHECK(!rep.mop.ran);
  CHECK(rep.ok);

  VerificationReport observed = verify(ctx, 2, 2, /*experimental=*/true);
  const VerdictEntry* attached = at(observed, 2, 1);
  REQUIRE(attached);
  CHECK(mentions(attached->note, "observed box total"));
}

TEST_CASE("grid bounds") {
  Cone sigma = a1();
  ComplexContext ctx = make_context(sigma, resolve(sigma, true));
  VerificationReport rep = verify(ctx, 7, 2);
  CHECK(rep.p_max == 2);
  CHECK(rep.entries.size() == 6);
  CHECK_THROWS_WITH_AS(verify(ctx, -1, 2), doctest::Contains("invalid_spec"),
                       Error);
}
