#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace qsc;
using namespace qsc::testing;

TEST_CASE("close_group: single involution gives {I, X}") {
  const ProjectiveRep rep = close_group({pauli_x()});
  REQUIRE(rep.order() == 2);
  CHECK(max_abs(rep.elements[0] - ComplexMatrix::Identity(2, 2)) < 1e-12);
  CHECK(distance_up_to_phase(rep.elements[1], pauli_x()) < 1e-12);
}

TEST_CASE("close_group: quaternion seeds close onto the Pauli images mod phase") {
  const Complex i{0, 1};
  const ProjectiveRep rep = close_group({i * pauli_x(), i * pauli_z()});
  REQUIRE(rep.order() == 4);
  // hand enumeration: every element must match one Pauli up to phase
  const std::vector<ComplexMatrix> paulis = {ComplexMatrix::Identity(2, 2), pauli_x(), pauli_y(),
                                             pauli_z()};
  std::vector<bool> seen(4, false);
  for (const ComplexMatrix& e : rep.elements) {
    int match = -1;
    for (int p = 0; p < 4; ++p)
      if (distance_up_to_phase(e, paulis[p]) < 1e-9) match = p;
    REQUIRE(match >= 0);
    CHECK(!seen[match]);
    seen[match] = true;
  }
}

TEST_CASE("close_group: tetrahedral generators close at order 12") {
  const BuiltinProtocol b = builtin_rep(Builtin::tetrahedral);
  CHECK(b.rep.order() == 12);
  CHECK(b.rep.dim == 2);
  for (const ComplexMatrix& e : b.rep.elements) CHECK(unitarity_defect(e) < 1e-10);
}

TEST_CASE("close_group: non-finite closure hits the cap") {
  ComplexMatrix irrational = ComplexMatrix::Zero(2, 2);
  irrational(0, 0) = 1;
  irrational(1, 1) = std::polar(1.0, 1.0);  // angle incommensurate with 2*pi
  CHECK_THROWS_WITH_AS(close_group({irrational}, 100),
                       doctest::Contains("group too large or not finite"), ValidationError);
}

TEST_CASE("close_group: rejects non-unitary generators") {
  CHECK_THROWS_WITH_AS(close_group({mat2(1, 1, 0, 1)}), doctest::Contains("not unitary"),
                       ValidationError);
}

TEST_CASE("tables: identity first, inverse and product tables consistent") {
  for (const std::string& name : {"tetrahedral", "pauli2", "quaternion"}) {
    const ProjectiveRep rep = builtin_rep(name).rep;
    CHECK(max_abs(rep.elements[0] - ComplexMatrix::Identity(rep.dim, rep.dim)) < 1e-12);
    for (int i = 0; i < rep.order(); ++i) {
      CHECK(rep.mult[i][rep.inverse[i]] == 0);
      CHECK(rep.mult[rep.inverse[i]][i] == 0);
      for (int j = 0; j < rep.order(); ++j)
        CHECK(distance_up_to_phase(rep.elements[i] * rep.elements[j],
                                   rep.elements[rep.mult[i][j]]) < 1e-10);
    }
  }
}

TEST_CASE("is_projective_rep: accepts closures, catches corruption") {
  ProjectiveRep rep = builtin_rep(Builtin::tetrahedral).rep;
  const RepCheck good = is_projective_rep(rep);
  CHECK(good.ok);
  CHECK(good.max_defect < 1e-12);

  ProjectiveRep bad_table = rep;
  bad_table.mult[1][2] = (bad_table.mult[1][2] + 1) % bad_table.order();
  CHECK_FALSE(is_projective_rep(bad_table).ok);

  ProjectiveRep bad_element = rep;
  bad_element.elements[3](0, 0) += 0.01;
  CHECK_FALSE(is_projective_rep(bad_element).ok);
}

TEST_CASE("is_irreducible: abelian order-2 group is reducible in dimension 2") {
  CHECK_FALSE(is_irreducible(close_group({pauli_x()})));
}

TEST_CASE("is_irreducible: Pauli orbit group is irreducible") {
  CHECK(is_irreducible(builtin_rep(Builtin::pauli2).rep));
}

TEST_CASE("is_irreducible: block doubled representation is reducible") {
  CHECK_FALSE(is_irreducible(builtin_rep(Builtin::reducible_demo).rep));
}

TEST_CASE("twirl collapses to (tr/d) I exactly for irreducible representations") {
  Rng rng(7);
  for (const std::string& name : {"tetrahedral", "pauli2"}) {
    const ProjectiveRep rep = builtin_rep(name).rep;
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = rng.gaussian_matrix(rep.dim, rep.dim);
      const ComplexMatrix expected =
          m.trace() / static_cast<double>(rep.dim) * ComplexMatrix::Identity(rep.dim, rep.dim);
      CHECK(max_abs(twirl(rep, m) - expected) < 1e-9);
    }
  }
}

TEST_CASE("covariant resolution: group sum of a projector is (|G|/d) I") {
  Rng rng(13);
  for (const std::string& name : {"tetrahedral", "pauli2"}) {
    const ProjectiveRep rep = builtin_rep(name).rep;
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexVector phi = rng.unit_vector(rep.dim);
      ComplexMatrix sum = ComplexMatrix::Zero(rep.dim, rep.dim);
      for (const ComplexMatrix& g : rep.elements) {
        const ComplexVector v = g * phi;
        sum += v * v.adjoint();
      }
      const double weight = static_cast<double>(rep.order()) / rep.dim;
      CHECK(max_abs(sum - weight * ComplexMatrix::Identity(rep.dim, rep.dim)) < 1e-9);
    }
  }
}

TEST_CASE("orbit: Pauli group splits the computational projectors") {
  const ProjectiveRep rep = builtin_rep(Builtin::pauli2).rep;
  const OrbitTable table = orbit(rep, DensityOperator::pure(ket({1, 0})));
  REQUIRE(table.states.size() == 2);
  CHECK(table.stabilizer_order == 2);
  CHECK(table.transitive);
  ComplexMatrix one = ComplexMatrix::Zero(2, 2);
  one(1, 1) = 1;
  CHECK(max_abs(table.states[1].matrix() - one) < 1e-12);
}

TEST_CASE("orbit: tetrahedral fiducial reproduces the four vertex states") {
  const BuiltinProtocol b = builtin_rep(Builtin::tetrahedral);
  const OrbitTable table = orbit(b.rep, DensityOperator::pure(*b.fiducial));
  REQUIRE(table.states.size() == 4);
  CHECK(table.stabilizer_order == 3);
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(max_abs(table.states[j].matrix() -
                  DensityOperator::pure(b.label_states[j]).matrix()) < 1e-8);
}

TEST_CASE("orbit: the center is a fixed point") {
  const ProjectiveRep rep = builtin_rep(Builtin::tetrahedral).rep;
  const OrbitTable table = orbit(rep, DensityOperator::maximally_mixed(2));
  CHECK(table.states.size() == 1);
  CHECK(table.stabilizer_order == rep.order());
}

TEST_CASE("orbit: action rows are permutations and compose with the product table") {
  for (const std::string& name : {"tetrahedral", "pauli2"}) {
    const BuiltinProtocol b = builtin_rep(name);
    const OrbitTable table = orbit(b.rep, DensityOperator::pure(*b.fiducial));
    const int states = static_cast<int>(table.states.size());
    for (int g = 0; g < b.rep.order(); ++g) {
      std::vector<bool> hit(states, false);
      for (int s = 0; s < states; ++s) {
        const int t = table.action[g][s];
        REQUIRE(t >= 0);
        REQUIRE(t < states);
        CHECK(!hit[t]);
        hit[t] = true;
      }
    }
    for (int g = 0; g < b.rep.order(); ++g)
      for (int h = 0; h < b.rep.order(); ++h)
        for (int s = 0; s < states; ++s)
          CHECK(table.action[g][table.action[h][s]] == table.action[b.rep.mult[g][h]][s]);
  }
}

TEST_CASE("tetrahedral orbit: pairwise squared overlaps are all 1/3") {
  const BuiltinProtocol b = builtin_rep(Builtin::tetrahedral);
  const OrbitTable table = orbit(b.rep, DensityOperator::pure(*b.fiducial));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x + 1; y < 4; ++y) {
      const double overlap = (table.states[x].matrix() * table.states[y].matrix()).trace().real();
      CHECK(overlap == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    }
}

TEST_CASE("builtin_rep: fixture metadata") {
  const BuiltinProtocol tetra = builtin_rep("tetrahedral");
  CHECK(tetra.rep.order() == 12);
  CHECK(tetra.rep.dim == 2);
  CHECK(tetra.bits_per_copy == 2);
  CHECK(tetra.label_states.size() == 4);

  const BuiltinProtocol pauli = builtin_rep("pauli2");
  CHECK(pauli.rep.order() == 4);
  CHECK(pauli.bits_per_copy == 1);

  const BuiltinProtocol quat = builtin_rep("quaternion");
  CHECK(quat.rep.order() == 4);
  CHECK_FALSE(quat.fiducial.has_value());

  CHECK_FALSE(is_irreducible(builtin_rep("reducible_demo").rep));
  CHECK_THROWS_WITH_AS(builtin_rep("octahedral"), doctest::Contains("unknown builtin"),
                       ValidationError);
}

TEST_CASE("tensor_power: k = 1 is the identity operation") {
  const ProjectiveRep rep = builtin_rep(Builtin::pauli2).rep;
  const ProjectiveRep same = tensor_power(rep, 1);
  CHECK(same.order() == rep.order());
  CHECK(same.dim == rep.dim);
  for (int i = 0; i < rep.order(); ++i) CHECK(max_abs(same.elements[i] - rep.elements[i]) == 0.0);
}

TEST_CASE("tensor_power: tetrahedral square is irreducible at order 144") {
  const ProjectiveRep rep2 = tensor_power(builtin_rep(Builtin::tetrahedral).rep, 2);
  CHECK(rep2.order() == 144);
  CHECK(rep2.dim == 4);
  CHECK(is_irreducible(rep2));
  CHECK(is_projective_rep(rep2).ok);
}

TEST_CASE("tensor_power: Pauli square counts and cap behaviour") {
  const ProjectiveRep rep2 = tensor_power(builtin_rep(Builtin::pauli2).rep, 2);
  CHECK(rep2.order() == 16);
  CHECK(rep2.dim == 4);
  CHECK_THROWS_WITH_AS(tensor_power(builtin_rep(Builtin::tetrahedral).rep, 5),
                       doctest::Contains("additivity"), ValidationError);
}
