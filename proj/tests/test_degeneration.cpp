#include <algorithm>
#include <set>

#include "doctest.h"
#include "skelefib/degeneration.hpp"
#include "skelefib/standard_models.hpp"
#include "support.hpp"

using namespace skelefib;

namespace {

FaceId face_with_vertices(const DegenerationModel& m, std::vector<DivisorId> vs) {
  std::sort(vs.begin(), vs.end());
  for (const auto& [id, f] : m.faces) {
    std::vector<DivisorId> w = f.vertices;
    std::sort(w.begin(), w.end());
    if (w == vs) return id;
  }
  FAIL("no face with the requested vertices");
  return 0;
}

// Two disjoint tetrahedron boundaries, n = 2, ids offset by 10 in the second.
DegenerationModel two_spheres() {
  std::vector<DivisorRecord> divisors;
  std::vector<std::vector<DivisorId>> tops;
  for (DivisorId base : {0L, 10L}) {
    for (DivisorId i = 1; i <= 4; ++i) divisors.push_back({base + i, 1, 0, ""});
    for (auto t : std::vector<std::vector<DivisorId>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) {
      for (DivisorId& v : t) v += base;
      tops.push_back(t);
    }
  }
  return build_model(2, divisors, tops, [](const DegenerationModel&, const Face& tau, DivisorId, DivisorId) {
    std::map<DivisorId, Integer> b;
    for (DivisorId v : tau.vertices) b[v] = 1;
    return b;
  });
}

}  // namespace

TEST_CASE("validation of the standard models") {
  const ValidationReport tate = validate_model(tate_model(3));
  CHECK(tate.pass);
  CHECK(tate.reduced);
  CHECK(tate.skeleton_dim == 1);

  DegenerationModel k3 = k3_tetrahedron();
  CHECK(validate_model(k3).pass);
  CHECK(k3.curves.size() == 6);

  SUBCASE("an edge with b = (2, 1) breaks the balance") {
    const FaceId ab = face_with_vertices(k3, {1, 2});
    k3.curves.at(ab).b.at(1) = 2;
    const ValidationReport r = validate_model(k3);
    CHECK_FALSE(r.pass);
    REQUIRE(r.issues.size() == 1);
    CHECK(r.issues[0].subject == ab);
    CHECK(r.issues[0].message.find("= 2 but sum b_j N_j = 3") != std::string::npos);
  }
  SUBCASE("wrong endpoint divisor") {
    const FaceId ab = face_with_vertices(k3, {1, 2});
    std::swap(k3.curves.at(ab).endpoint_divisors.first, k3.curves.at(ab).endpoint_divisors.second);
    CHECK_FALSE(validate_model(k3).pass);
  }
  SUBCASE("broken subface list") {
    const FaceId abc = face_with_vertices(k3, {1, 2, 3});
    std::swap(k3.faces.at(abc).subfaces[0], k3.faces.at(abc).subfaces[1]);
    CHECK_FALSE(validate_model(k3).pass);
  }
  SUBCASE("curve data on a boundary face") {
    DegenerationModel m = tate_model(3);
    m.faces.erase(m.top_faces().back());
    CHECK_FALSE(validate_model(m).pass);
  }
  SUBCASE("require_valid throws InvalidModel") {
    k3.divisors.at(1).N = 0;
    try {
      require_valid(k3);
      FAIL("expected InvalidModel");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidModel);
    }
  }
}

TEST_CASE("the I_2 model is a Delta-complex with two edges on the same vertices") {
  const DegenerationModel m = tate_model(2);
  CHECK(validate_model(m).pass);
  const auto tops = m.top_faces();
  REQUIRE(tops.size() == 2);
  CHECK(m.face(tops[0]).vertices == m.face(tops[1]).vertices);
  CHECK(homology_ranks(whole_complex(m)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("essential skeleton") {
  SUBCASE("all weights zero") {
    const EssentialSkeleton sk = essential_skeleton(k3_tetrahedron());
    CHECK(sk.min_ratio == 0);
    CHECK(sk.vertices == std::vector<DivisorId>{1, 2, 3, 4});
    CHECK(sk.complex.faces.size() == k3_tetrahedron().faces.size());
  }
  SUBCASE("path A - C - B with C of ratio 1/2") {
    const DegenerationModel m =
        build_model(1, {{1, 1, 0, "A"}, {2, 1, 0, "B"}, {3, 2, 1, "C"}}, {{1, 3}, {2, 3}},
                    [](const DegenerationModel&, const Face&, DivisorId, DivisorId) { return std::map<DivisorId, Integer>{}; });
    const EssentialSkeleton sk = essential_skeleton(m);
    CHECK(sk.min_ratio == 0);
    CHECK(sk.vertices == std::vector<DivisorId>{1, 2});
    CHECK(sk.complex.dim() == 0);
    CHECK_FALSE(is_maximally_degenerate(m));
  }
  SUBCASE("ratios 1/2 and 1/3") {
    const DegenerationModel m =
        build_model(1, {{1, 2, 1, "A"}, {2, 3, 1, "B"}}, {{1, 2}},
                    [](const DegenerationModel&, const Face&, DivisorId, DivisorId) { return std::map<DivisorId, Integer>{}; });
    const EssentialSkeleton sk = essential_skeleton(m);
    CHECK(sk.min_ratio == make_rational(1, 3));
    CHECK(sk.vertices == std::vector<DivisorId>{2});
  }
  SUBCASE("shifting every nu by a multiple of N keeps the skeleton") {
    DegenerationModel m = nonreduced_cycle();
    m.divisors.at(3).nu = 1;
    const EssentialSkeleton before = essential_skeleton(m);
    for (auto& [id, d] : m.divisors) d.nu += 5 * d.N;
    const EssentialSkeleton after = essential_skeleton(m);
    CHECK(after.vertices == before.vertices);
    CHECK(after.min_ratio == before.min_ratio + 5);
  }
}

TEST_CASE("maximal degeneracy") {
  CHECK(is_maximally_degenerate(k3_tetrahedron()));
  for (int k = 2; k <= 6; ++k) CHECK(is_maximally_degenerate(tate_model(k)));
  DegenerationModel m = k3_tetrahedron();
  m.divisors.at(1).nu = 1;
  m.divisors.at(2).nu = 1;
  // every triangle has a vertex in {A, B}
  CHECK_FALSE(is_maximally_degenerate(m));
}

TEST_CASE("pseudomanifold checks") {
  CHECK(pseudomanifold_check(whole_complex(k3_tetrahedron())).pass);

  const DegenerationModel single =
      build_model(2, {{1, 1, 0, ""}, {2, 1, 0, ""}, {3, 1, 0, ""}}, {{1, 2, 3}},
                  [](const DegenerationModel&, const Face&, DivisorId, DivisorId) { return std::map<DivisorId, Integer>{}; });
  const PseudomanifoldReport r1 = pseudomanifold_check(whole_complex(single));
  CHECK_FALSE(r1.pass);
  CHECK_FALSE(r1.two_sided);

  const PseudomanifoldReport r2 = pseudomanifold_check(whole_complex(two_spheres()));
  CHECK_FALSE(r2.pass);
  CHECK(r2.two_sided);
  CHECK_FALSE(r2.strongly_connected);
}

TEST_CASE("homology ranks") {
  CHECK(homology_ranks(whole_complex(k3_tetrahedron())) == std::vector<std::size_t>{1, 0, 1});
  CHECK(homology_ranks(whole_complex(tate_model(3))) == std::vector<std::size_t>{1, 1});
  SubComplex point;
  point.faces.emplace(1, Face{1, {7}, {}});
  CHECK(homology_ranks(point) == std::vector<std::size_t>{1});

  const SubComplex spheres = whole_complex(two_spheres());
  CHECK(homology_ranks(spheres) == std::vector<std::size_t>{2, 0, 2});
  CHECK(homology_ranks(spheres)[0] == connected_components(spheres));

  const SubComplex k3 = whole_complex(k3_tetrahedron());
  const IntMatrix d1 = boundary_matrix(k3, 1);
  const IntMatrix d2 = boundary_matrix(k3, 2);
  CHECK(d1 * d2 == IntMatrix(d1.rows(), d2.cols()));
}

TEST_CASE("star subdivision") {
  const DegenerationModel k3 = k3_tetrahedron();
  const FaceId abc = face_with_vertices(k3, {1, 2, 3});
  const Subdivision s = star_subdivide(k3, abc);
  const DegenerationModel& m = s.model;
  CHECK(validate_model(m).pass);
  CHECK(testsupport::all_strata_balanced(m));
  CHECK(m.divisor(s.new_vertex).N == 3);
  CHECK(m.divisor(s.new_vertex).nu == 0);
  CHECK(m.top_faces().size() == 6);

  const StratumCurveData& ab = *m.curve(face_with_vertices(m, {1, 2}));
  CHECK(ab.b.at(1) == 2);
  CHECK(ab.b.at(2) == 2);
  std::set<DivisorId> ends{ab.endpoint_divisors.first, ab.endpoint_divisors.second};
  CHECK(ends == std::set<DivisorId>{s.new_vertex, 4});

  const StratumCurveData& ax = *m.curve(face_with_vertices(m, {1, s.new_vertex}));
  CHECK(ax.b.at(1) == -1);
  CHECK(ax.b.at(s.new_vertex) == 1);
  ends = {ax.endpoint_divisors.first, ax.endpoint_divisors.second};
  CHECK(ends == std::set<DivisorId>{2, 3});

  CHECK(testsupport::min_ratio(m) == testsupport::min_ratio(k3));
  CHECK(pseudomanifold_check(essential_skeleton(m).complex).pass);
  CHECK(homology_ranks(whole_complex(m)) == std::vector<std::size_t>{1, 0, 1});

  SUBCASE("missing curve data") {
    DegenerationModel broken = k3;
    broken.curves.erase(face_with_vertices(k3, {1, 2}));
    try {
      star_subdivide(broken, abc);
      FAIL("expected MissingCurveData");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingCurveData);
    }
  }
  SUBCASE("new vertex ratio") {
    DegenerationModel weighted = k3;
    weighted.divisors.at(1).nu = 2;
    const Subdivision w = star_subdivide(weighted, abc);
    const Rational ratio = make_rational(w.model.divisor(w.new_vertex).nu, w.model.divisor(w.new_vertex).N);
    CHECK(ratio == make_rational(2, 3));
    CHECK(ratio > testsupport::min_ratio(weighted));
    CHECK(testsupport::min_ratio(w.model) == testsupport::min_ratio(weighted));
  }
  SUBCASE("iterated subdivision of the I_3 cycle") {
    DegenerationModel t = tate_model(3);
    for (int round = 0; round < 3; ++round) {
      t = star_subdivide(t, t.top_faces().front()).model;
      CHECK(validate_model(t).pass);
      CHECK(homology_ranks(whole_complex(t)) == std::vector<std::size_t>{1, 1});
    }
  }
}

TEST_CASE("edge flips") {
  const DegenerationModel k3 = k3_tetrahedron();
  const FaceId ab = face_with_vertices(k3, {1, 2});
  const DegenerationModel flipped = edge_flip(k3, ab);
  CHECK(validate_model(flipped).pass);
  CHECK(flipped.face(ab).vertices == std::vector<DivisorId>{3, 4});
  CHECK(flipped.curve(ab) == nullptr);
  CHECK(euler_characteristic(whole_complex(flipped)) == 2);

  // the two triangles on the new edge are ACD and BCD
  std::set<std::vector<DivisorId>> on_edge;
  for (const auto& [f, pos] : flipped.cofaces(ab)) on_edge.insert(flipped.face(f).vertices);
  CHECK(on_edge == std::set<std::vector<DivisorId>>{{1, 3, 4}, {2, 3, 4}});

  SUBCASE("supplied curve data is validated") {
    try {
      edge_flip(k3, ab, std::map<DivisorId, Integer>{{3, 2}, {4, 2}});
      FAIL("expected InvalidCurveData");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidCurveData);
    }
    const DegenerationModel with = edge_flip(k3, ab, std::map<DivisorId, Integer>{{3, 1}, {4, 1}});
    CHECK(with.curve(ab) != nullptr);
    CHECK(validate_model(with).pass);
  }
  SUBCASE("flipping back gives an isomorphic complex") {
    const DegenerationModel back = edge_flip(flipped, ab);
    CHECK(same_vertex_sets(whole_complex(back), whole_complex(k3)));
    CHECK(validate_model(back).pass);
  }
  SUBCASE("errors") {
    try {
      edge_flip(tate_model(3), 1);
      FAIL("expected NotASurfaceModel");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotASurfaceModel);
    }
    // in the doubled triangle both sides of an edge see the same vertex
    const DegenerationModel pillow =
        build_model(2, {{1, 1, 0, ""}, {2, 1, 0, ""}, {3, 1, 0, ""}}, {{1, 2, 3}, {1, 2, 3}},
                    [](const DegenerationModel&, const Face&, DivisorId, DivisorId) { return std::map<DivisorId, Integer>{}; });
    try {
      edge_flip(pillow, face_with_vertices(pillow, {1, 2}));
      FAIL("expected DegenerateQuad");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateQuad);
    }
  }
}

TEST_CASE("DOT export") {
  DegenerationModel m = nonreduced_cycle();
  m.divisors.at(3).nu = 1;
  const std::string dot = export_dot(m);
  CHECK(dot.rfind("graph dual_complex {", 0) == 0);
  CHECK(dot.find("d3 [label=\"C\\nN=2\", width=0.5") != std::string::npos);
  CHECK(dot.find("fillcolor=\"white\"") != std::string::npos);
  CHECK(dot.find("d1 -- d2") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 3 + 3 + 1);
}
