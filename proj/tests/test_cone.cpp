#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "toric/cone.hpp"

using namespace toric;

namespace {

IntMatrix cols2(int a1, int a2, int b1, int b2) {
  IntMatrix m(2, 2);
  m << a1, b1, a2, b2;
  return m;
}

IntVector vec2(int a, int b) {
  IntVector v(2);
  v << a, b;
  return v;
}

IntVector vec3(int a, int b, int c) {
  IntVector v(3);
  v << a, b, c;
  return v;
}

std::set<std::vector<Int>> column_set(const IntMatrix& m) {
  std::set<std::vector<Int>> s;
  for (Index j = 0; j < m.cols(); ++j) {
    std::vector<Int> col;
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j));
    s.insert(col);
  }
  return s;
}

IntMatrix quadric_rays() {
  IntMatrix m(3, 4);
  m << 1, 0, 1, 0,
       0, 1, 0, 1,
       0, 0, 1, 1;
  return m;
}

IntMatrix codim2_rays() {
  IntMatrix m(3, 3);
  m << 1, 0, 0,
       0, 1, 1,
       0, 0, 2;
  return m;
}

}  // namespace

TEST_CASE("dual cone of the quadrant is the quadrant") {
  Cone c = Cone::from_rays(cols2(1, 0, 0, 1));
  DualCone d = dual_cone(c);
  CHECK(column_set(d.generators) ==
        std::set<std::vector<Int>>{{1, 0}, {0, 1}});
}

TEST_CASE("dual cone of a singular quadric surface cone") {
  Cone c = Cone::from_rays(cols2(1, 0, 1, 2));
  DualCone d = dual_cone(c);
  CHECK(column_set(d.generators) ==
        std::set<std::vector<Int>>{{0, 1}, {2, -1}});
}

TEST_CASE("dual cone of the quadric threefold cone") {
  Cone c = Cone::from_rays(quadric_rays());
  DualCone d = dual_cone(c);
  CHECK(column_set(d.generators) ==
        std::set<std::vector<Int>>{
            {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
}

TEST_CASE("face lattice of a simplicial cone is the power set") {
  Cone c = Cone::from_rays(cols2(1, 0, 1, 2));
  const auto& faces = c.faces();
  REQUIRE(faces.size() == 4);
  CHECK(faces[0].rays.empty());
  CHECK(faces[0].dim == 0);
  CHECK(faces[1].rays == std::vector<Index>{0});
  CHECK(faces[2].rays == std::vector<Index>{1});
  CHECK(faces[3].rays == std::vector<Index>{0, 1});
  CHECK(faces[3].dim == 2);

  IntMatrix e3 = IntMatrix::Identity(3, 3);
  Cone oct = Cone::from_rays(e3);
  CHECK(oct.faces().size() == 8);
}

TEST_CASE("face lattice of the quadric cone") {
  Cone c = Cone::from_rays(quadric_rays());
  const auto& faces = c.faces();
  REQUIRE(faces.size() == 10);
  std::set<std::vector<Index>> two_dim;
  int n_rays = 0;
  for (const auto& f : faces) {
    if (f.dim == 1) ++n_rays;
    if (f.dim == 2) two_dim.insert(f.rays);
  }
  CHECK(n_rays == 4);
  CHECK(two_dim == std::set<std::vector<Index>>{
                       {0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("face witnesses cut out their faces") {
  for (const IntMatrix& rays :
       {quadric_rays(), codim2_rays(), IntMatrix(cols2(1, 0, 1, 2))}) {
    Cone c = Cone::from_rays(rays);
    for (const auto& f : c.faces()) {
      // witness lies in the dual cone
      for (Index j = 0; j < c.num_rays(); ++j) {
        Int t = f.witness.dot(c.rays().col(j));
        CHECK(t >= 0);
        const bool in_face =
            std::find(f.rays.begin(), f.rays.end(), j) != f.rays.end();
        CHECK((t == 0) == in_face);
      }
    }
  }
}

TEST_CASE("classification of pinned cones") {
  {
    ConeProfile p = classify(Cone::from_rays(cols2(1, 0, 1, 2)));
    CHECK(p.simplicial);
    CHECK(!p.smooth);
    CHECK(p.multiplicity == 2);
    REQUIRE(p.codim_sing.has_value());
    CHECK(*p.codim_sing == 2);
  }
  {
    ConeProfile p = classify(Cone::from_rays(quadric_rays()));
    CHECK(!p.simplicial);
    CHECK(!p.smooth);
    REQUIRE(p.codim_sing.has_value());
    CHECK(*p.codim_sing == 3);
  }
  {
    ConeProfile p = classify(Cone::from_rays(codim2_rays()));
    CHECK(p.simplicial);
    CHECK(!p.smooth);
    CHECK(p.multiplicity == 2);
    REQUIRE(p.codim_sing.has_value());
    CHECK(*p.codim_sing == 2);
  }
  {
    ConeProfile p = classify(Cone::from_rays(IntMatrix::Identity(3, 3)));
    CHECK(p.simplicial);
    CHECK(p.smooth);
    CHECK(p.multiplicity == 1);
    CHECK(!p.codim_sing.has_value());
  }
}

TEST_CASE("cone validation rejects bad input") {
  {
    IntMatrix m(2, 1);
    m << 2, 4;  // not primitive
    CHECK_THROWS_AS(Cone::from_rays(m), Error);
  }
  {
    IntMatrix m = cols2(1, 0, -1, 0);  // a line
    CHECK_THROWS_AS(Cone::from_rays(m), Error);
  }
  {
    IntMatrix m(2, 3);
    m << 1, 1, 1, 0, 2, 1;  // (1,1) is interior, not extreme
    CHECK_THROWS_AS(Cone::from_rays(m), Error);
  }
  {
    IntMatrix m = cols2(1, 0, 1, 0);  // duplicate
    CHECK_THROWS_AS(Cone::from_rays(m), Error);
  }
  {
    // full-dimensionality requirement on operations
    IntMatrix m(3, 2);
    m << 1, 0, 0, 1, 0, 0;
    Cone c = Cone::from_rays(m);
    CHECK(c.dim() == 2);
    CHECK_THROWS_AS(dual_cone(c), Error);
    CHECK_THROWS_AS(classify(c), Error);
    try {
      enumerate_degrees(c, 1);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFullDimensional);
    }
  }
}

TEST_CASE("degree enumeration on pinned cones") {
  {
    Cone c = Cone::from_rays(cols2(1, 0, 1, 2));
    auto degs = enumerate_degrees(c, 0);
    REQUIRE(degs.size() == 1);
    CHECK(degs[0] == vec2(0, 0));
    degs = enumerate_degrees(c, 1);
    REQUIRE(degs.size() == 2);
    CHECK(degs[0] == vec2(0, 0));
    CHECK(degs[1] == vec2(1, 0));
  }
  {
    Cone c = Cone::from_rays(cols2(1, 0, 0, 1));
    auto degs = enumerate_degrees(c, 1);
    REQUIRE(degs.size() == 4);
    CHECK(degs[0] == vec2(0, 0));
    CHECK(degs[1] == vec2(0, 1));
    CHECK(degs[2] == vec2(1, 0));
    CHECK(degs[3] == vec2(1, 1));
  }
}

TEST_CASE("degree enumeration properties") {
  std::mt19937 gen(91u);
  std::vector<IntMatrix> cones = {quadric_rays(), codim2_rays(),
                                  cols2(1, 0, 1, 2), cols2(2, -1, 1, 3)};
  for (const auto& rays : cones) {
    Cone c = Cone::from_rays(rays);
    auto small = enumerate_degrees(c, 2);
    auto large = enumerate_degrees(c, 3);
    // monotone in the bound
    for (const auto& u : small) {
      bool found = false;
      for (const auto& v : large)
        if (u == v) found = true;
      CHECK(found);
    }
    // membership agrees with the inequality definition
    for (const auto& u : large) {
      for (Index j = 0; j < c.num_rays(); ++j) {
        Int t = u.dot(c.rays().col(j));
        CHECK(t >= 0);
        CHECK(t <= 3);
      }
    }
    // lexicographic order, no duplicates
    for (std::size_t i = 0; i + 1 < large.size(); ++i)
      CHECK(lex_less(large[i], large[i + 1]));
    // random box points: enumerated iff they satisfy the inequalities
    const Index n = c.ambient_rank();
    for (int rep = 0; rep < 200; ++rep) {
      IntVector u(n);
      for (Index i = 0; i < n; ++i)
        u[i] = static_cast<int>(gen() % 9) - 4;
      bool inside = true;
      for (Index j = 0; j < c.num_rays(); ++j) {
        Int t = u.dot(c.rays().col(j));
        if (t < 0 || t > 3) inside = false;
      }
      bool listed = false;
      for (const auto& v : large)
        if (u == v) listed = true;
      CHECK(listed == inside);
    }
  }
}

TEST_CASE("duality round trip") {
  for (const IntMatrix& rays :
       {quadric_rays(), codim2_rays(), IntMatrix(cols2(1, 0, 1, 2))}) {
    Cone c = Cone::from_rays(rays);
    DualCone d = dual_cone(c);
    for (Index i = 0; i < d.generators.cols(); ++i) {
      Int min_pair = -1;
      for (Index j = 0; j < c.num_rays(); ++j) {
        Int t = IntVector(d.generators.col(i)).dot(c.rays().col(j));
        CHECK(t >= 0);
        if (min_pair < 0 || t < min_pair) min_pair = t;
      }
      CHECK(min_pair == 0);  // generators touch the boundary
    }
  }
}

TEST_CASE("double description handles lineality and redundancy") {
  {
    // no inequalities: the whole plane
    DualDescription d = dual_description(IntMatrix(0, 2));
    CHECK(d.lines.cols() == 2);
    CHECK(d.rays.cols() == 0);
  }
  {
    // single halfspace in rank 3
    IntMatrix a(1, 3);
    a << 1, 0, 0;
    DualDescription d = dual_description(a);
    CHECK(d.lines.cols() == 2);
    CHECK(d.rays.cols() == 1);
    CHECK(d.rays(0, 0) == 1);
  }
  {
    // repeated and redundant inequalities
    IntMatrix a(4, 2);
    a << 1, 0, 1, 0, 0, 1, 1, 1;
    DualDescription d = dual_description(a);
    CHECK(d.lines.cols() == 0);
    CHECK(column_set(d.rays) == std::set<std::vector<Int>>{{1, 0}, {0, 1}});
  }
  {
    // opposite halfspaces: a line inside a plane section
    IntMatrix a(2, 2);
    a << 1, 0, -1, 0;
    DualDescription d = dual_description(a);
    CHECK(d.lines.cols() == 1);
    CHECK(d.rays.cols() == 0);
  }
}

TEST_CASE("simplicial power-set law on random cones") {
  std::mt19937 gen(20240818u);
  int built = 0;
  while (built < 30) {
    const Index n = 2 + static_cast<Index>(gen() % 2);
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) = static_cast<int>(gen() % 9) - 4;
    if (rank_of(m) != n) continue;
    for (Index j = 0; j < n; ++j) m.col(j) = primitive(m.col(j));
    bool dup = false;
    for (Index a = 0; a < n && !dup; ++a)
      for (Index b = a + 1; b < n && !dup; ++b)
        if (IntVector(m.col(a)) == IntVector(m.col(b))) dup = true;
    if (dup) continue;
    ++built;
    Cone c = Cone::from_rays(m);
    CHECK(c.faces().size() == (std::size_t{1} << n));
    ConeProfile p = classify(c);
    CHECK(p.simplicial);
    // multiplicity equals |det|
    Int det = 1;
    for (const Int& d : snf(m).divisors) det *= d;
    CHECK(p.multiplicity == det);
  }
}
