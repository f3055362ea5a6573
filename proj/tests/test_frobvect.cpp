#include "frobtft/frobvect.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace frobtft;

namespace {

VectAlgebra load(const std::string& name) {
  return load_algebra(fixture_path("algebras/" + name + ".json"));
}

Scalar rat(long p, long q = 1) { return Scalar::from_rational(Rational(p, q), 1); }

const char* kAll[] = {"k", "kz2", "kz3", "ks3", "m2", "dualnum", "kxk"};
const char* kSpecial[] = {"k", "kz2", "kz3", "ks3", "m2", "kxk"};

}  // namespace

TEST(FrobVect, FixturesAreAlgebrasPerBruteForce) {
  for (const char* name : kAll) {
    VectAlgebra alg = load(name);
    EXPECT_TRUE(oracles::associativity_brute(alg)) << name;
    EXPECT_TRUE(oracles::unit_brute(alg)) << name;
    AxiomFlags flags = check_axioms(alg);
    EXPECT_TRUE(flags.associative) << name;
    EXPECT_TRUE(flags.unital) << name;
  }
}

TEST(FrobVect, GroundFieldAllFlags) {
  AxiomFlags f = check_axioms(load("k"));
  EXPECT_TRUE(f.associative && f.unital && f.frobenius && f.symmetric && f.special &&
              f.commutative);
  EXPECT_EQ(f.gamma, rat(1));
  EXPECT_EQ(f.gamma_prime, rat(1));
}

TEST(FrobVect, DualNumbersFrobeniusButNotSpecial) {
  AxiomFlags f = check_axioms(load("dualnum"));
  EXPECT_TRUE(f.frobenius);
  EXPECT_TRUE(f.symmetric);
  EXPECT_TRUE(f.commutative);
  EXPECT_FALSE(f.special);
}

TEST(FrobVect, DualNumbersMDeltaOfOneIsTwoX) {
  VectAlgebra alg = load("dualnum");
  Matrix md = alg.mult_matrix() * alg.comult();
  EXPECT_EQ(md.at(0, 0), rat(0));
  EXPECT_EQ(md.at(1, 0), rat(2));
}

TEST(FrobVect, MatrixAlgebraSymmetricSpecial) {
  AxiomFlags f = check_axioms(load("m2"));
  EXPECT_TRUE(f.frobenius && f.symmetric && f.special);
  EXPECT_FALSE(f.commutative);
  EXPECT_EQ(f.gamma, rat(2));
  EXPECT_FALSE(f.gamma_prime.is_zero());
}

TEST(FrobVect, DegeneratePairingReportsRadicalWitness) {
  VectAlgebra alg = load("dualnum");
  alg.counit = {rat(1), rat(0)};  // trace-type counit on k[x]/(x^2) is degenerate
  AxiomFlags f = check_axioms(alg);
  EXPECT_FALSE(f.frobenius);
  ASSERT_TRUE(f.radical_witness.has_value());
  // the witness pairs to zero with everything
  Matrix kap = alg.kappa();
  for (size_t i = 0; i < alg.n; ++i) {
    Scalar acc = Scalar::zero(1);
    for (size_t j = 0; j < alg.n; ++j) acc = acc + kap.at(i, j) * (*f.radical_witness)[j];
    EXPECT_EQ(acc, rat(0));
  }
}

TEST(FrobVect, DerivedComultIsFrobeniusCompatible) {
  for (const char* name : kAll) {
    VectAlgebra alg = load(name);
    if (check_axioms(alg).frobenius) EXPECT_TRUE(frobenius_compatibility_holds(alg)) << name;
  }
}

TEST(FrobVect, NormalizeSpecialAchievesGammaDimAndGammaPrimeOne) {
  for (const char* name : kSpecial) {
    VectAlgebra norm = normalize_special(load(name));
    AxiomFlags f = check_axioms(norm);
    EXPECT_EQ(f.gamma, rat(static_cast<long>(norm.n))) << name;
    EXPECT_EQ(f.gamma_prime, rat(1)) << name;
  }
}

TEST(FrobVect, NormalizeSpecialIdempotent) {
  for (const char* name : kSpecial) {
    VectAlgebra once = normalize_special(load(name));
    VectAlgebra twice = normalize_special(once);
    EXPECT_EQ(once.counit, twice.counit) << name;
  }
}

TEST(FrobVect, NormalizeM2Gamma4) {
  VectAlgebra norm = normalize_special(load("m2"));
  AxiomFlags f = check_axioms(norm);
  EXPECT_EQ(f.gamma, rat(4));
  EXPECT_EQ(f.gamma_prime, rat(1));
}

TEST(FrobVect, NormalizeKz2Gamma2) {
  VectAlgebra norm = normalize_special(load("kz2"));
  EXPECT_EQ(check_axioms(norm).gamma, rat(2));
}

TEST(FrobVect, NormalizeRejectsNonSpecial) {
  EXPECT_THROW(normalize_special(load("dualnum")), Error);
}

TEST(FrobVect, CenterDims) {
  EXPECT_EQ(center(load("m2")).cols(), 1u);
  EXPECT_EQ(center(load("kz3")).cols(), 3u);
  EXPECT_EQ(center(load("ks3")).cols(), 3u);
  EXPECT_EQ(center(load("kxk")).cols(), 2u);
}

TEST(FrobVect, CenterMatchesBruteForce) {
  for (const char* name : kAll)
    EXPECT_EQ(center(load(name)).cols(), oracles::center_dim_brute(load(name))) << name;
}

TEST(FrobVect, CenterProjectorGroundField) {
  Matrix pi = center_projector(normalize_special(load("k")));
  EXPECT_EQ(pi, Matrix::identity(1, 1));
}

TEST(FrobVect, CenterProjectorCommutativeIsIdentity) {
  Matrix pi = center_projector(normalize_special(load("kz2")));
  EXPECT_EQ(pi, Matrix::identity(2, 1));
}

TEST(FrobVect, CenterProjectorM2RankOneOntoIdentity) {
  VectAlgebra norm = normalize_special(load("m2"));
  Matrix pi = center_projector(norm);
  EXPECT_EQ(pi.rank(), 1u);
  EXPECT_EQ(pi * pi, pi);
  // image is spanned by the identity matrix E11 + E22
  Matrix img = pi.column_space_basis();
  ASSERT_EQ(img.cols(), 1u);
  Scalar lambda = img.at(0, 0);
  EXPECT_EQ(img.at(3, 0), lambda);
  EXPECT_EQ(img.at(1, 0), rat(0));
  EXPECT_EQ(img.at(2, 0), rat(0));
}

TEST(FrobVect, CenterProjectorIdempotentWithImageCenter) {
  for (const char* name : kSpecial) {
    VectAlgebra norm = normalize_special(load(name));
    Matrix pi = center_projector(norm);
    EXPECT_EQ(pi * pi, pi) << name;
    EXPECT_EQ(pi.rank(), center(norm).cols()) << name;
    // projector fixes the center
    Matrix z = center(norm);
    EXPECT_EQ(pi * z, z) << name;
  }
}

TEST(FrobVect, TensorWithGroundFieldIsIsomorphicData) {
  VectAlgebra a = load("kz2");
  VectAlgebra t = tensor_algebra(load("k"), a);
  EXPECT_EQ(t.n, a.n);
  EXPECT_EQ(t.mult, a.mult);
  EXPECT_EQ(t.unit, a.unit);
  EXPECT_EQ(t.counit, a.counit);
}

TEST(FrobVect, TensorCenterDims) {
  EXPECT_EQ(center(tensor_algebra(load("kz2"), load("kz2"))).cols(), 4u);
  EXPECT_EQ(center(tensor_algebra(load("m2"), load("kz2"))).cols(), 2u);
}

TEST(FrobVect, CenterDimMultiplicativeAcrossPairs) {
  for (const char* a : kSpecial)
    for (const char* b : kSpecial) {
      VectAlgebra A = load(a), B = load(b);
      if (A.n * B.n > 16) continue;  // keep the matrix sizes modest
      EXPECT_EQ(center(tensor_algebra(A, B)).cols(), center(A).cols() * center(B).cols())
          << a << " x " << b;
    }
}

TEST(FrobVect, TensorOfSpecialIsSpecial) {
  VectAlgebra t = tensor_algebra(load("m2"), load("kz2"));
  AxiomFlags f = check_axioms(t);
  EXPECT_TRUE(f.symmetric && f.special);
}

TEST(FrobVect, HandleOracleTorusIsCenterDim) {
  for (const char* name : kSpecial) {
    VectAlgebra norm = normalize_special(load(name));
    EXPECT_EQ(oracles::closed_surface_value(norm, 1),
              rat(static_cast<long>(center(norm).cols())))
        << name;
  }
}

TEST(FrobVect, HandleOracleSphereIsDim) {
  // genus 0 value equals eps(unit) = dim for normalized algebras
  for (const char* name : kSpecial) {
    VectAlgebra norm = normalize_special(load(name));
    EXPECT_EQ(oracles::closed_surface_value(norm, 0), rat(static_cast<long>(norm.n))) << name;
  }
}

TEST(FrobVect, HandleOracleGenusTwoM2) {
  VectAlgebra norm = normalize_special(load("m2"));
  EXPECT_EQ(oracles::closed_surface_value(norm, 2), rat(1, 4));
}
