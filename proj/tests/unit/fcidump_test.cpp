#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qopt/chem/fcidump.hpp"
#include "qopt/error.hpp"

using namespace qopt;
using namespace qopt::chem;

namespace {

const char* kHeader = " &FCI NORB=2,NELEC=2,MS2=0,\n  ORBSYM=1,1,\n  ISYM=1,\n &END\n";

}  // namespace

TEST(Fcidump, HeaderFields) {
  const auto m = parse_fcidump(std::string(kHeader));
  EXPECT_EQ(m.n_orb, 2u);
  EXPECT_EQ(m.n_elec, 2u);
  EXPECT_EQ(m.ms2, 0);
  EXPECT_EQ(m.core_energy, 0.0);
}

TEST(Fcidump, ChemistToPhysicist) {
  const auto m = parse_fcidump(std::string(kHeader) + "0.75 1 1 1 1\n0.25 2 1 2 2\n");
  EXPECT_EQ(m.phys(0, 0, 0, 0), 0.75);
  EXPECT_EQ(m.chem(1, 0, 1, 1), 0.25);
  // (21|22) = <22|12> and its symmetry partners
  EXPECT_EQ(m.phys(1, 1, 0, 1), 0.25);
  EXPECT_EQ(m.chem(0, 1, 1, 1), 0.25);
  EXPECT_EQ(m.chem(1, 1, 1, 0), 0.25);
  EXPECT_EQ(m.chem(0, 0, 1, 1), 0.0);
  EXPECT_NO_THROW(m.validate());
}

TEST(Fcidump, OneBodyAndCore) {
  const auto m = parse_fcidump(std::string(kHeader) + "-1.25 2 1 0 0\n0.715 0 0 0 0\n0.1 1 0 0 0\n");
  EXPECT_EQ(m.h(1, 0), -1.25);
  EXPECT_EQ(m.h(0, 1), -1.25);
  EXPECT_EQ(m.core_energy, 0.715);
}

TEST(Fcidump, FortranExponent) {
  const auto m = parse_fcidump(std::string(kHeader) + "1.5D-01 1 1 0 0\n");
  EXPECT_DOUBLE_EQ(m.h(0, 0), 0.15);
}

TEST(Fcidump, Errors) {
  try {
    parse_fcidump(std::string(kHeader) + "0.5 1 1 1 1\nnot a number 1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
  EXPECT_THROW(parse_fcidump(std::string(kHeader) + "0.5 3 1 1 1\n"), IndexError);
  EXPECT_THROW(parse_fcidump(std::string(kHeader) + "0.5 -1 1 1 1\n"), IndexError);
  EXPECT_THROW(parse_fcidump(" &FCI NELEC=2,\n &END\n"), HeaderError);
  EXPECT_THROW(parse_fcidump(" &FCI NORB=2,\n &END\n"), HeaderError);
  EXPECT_THROW(parse_fcidump(std::string(kHeader) + "0.5 1 1 1\n"), ParseError);
}

TEST(Fcidump, RoundTrip) {
  const auto m = read_fcidump(oracle::data_path("fcidump/h4_chain_sto3g.fcidump"));
  const auto again = parse_fcidump(write_fcidump(m));
  EXPECT_EQ(again.n_orb, m.n_orb);
  EXPECT_EQ(again.core_energy, m.core_energy);
  EXPECT_EQ((again.h - m.h).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(again.g, m.g);
}

TEST(Fcidump, FixturesAreSymmetric) {
  for (const char* f : {"fcidump/h2_sto3g.fcidump", "fcidump/h4_chain_sto3g.fcidump", "fcidump/lih_sto3g.fcidump"}) {
    const auto m = read_fcidump(oracle::data_path(f));
    EXPECT_NO_THROW(m.validate()) << f;
  }
}

TEST(Fcidump, FixtureHartreeFockEnergies) {
  // Reference RHF energies recorded when the fixtures were generated.
  EXPECT_NEAR(closed_shell_energy(read_fcidump(oracle::data_path("fcidump/h2_sto3g.fcidump")), 1),
              -1.116684387085, 1e-9);
  EXPECT_NEAR(closed_shell_energy(read_fcidump(oracle::data_path("fcidump/lih_sto3g.fcidump")), 2),
              -7.862026959394, 1e-9);
  EXPECT_NEAR(closed_shell_energy(read_fcidump(oracle::data_path("fcidump/h4_chain_sto3g.fcidump")), 2),
              -2.098545936998, 1e-9);
}

TEST(FrozenCore, ZeroIsIdentity) {
  const auto m = read_fcidump(oracle::data_path("fcidump/lih_sto3g.fcidump"));
  const auto f = freeze_core(m, 0);
  EXPECT_EQ(f.g, m.g);
  EXPECT_EQ(f.core_energy, m.core_energy);
}

TEST(FrozenCore, LiHDeterminantEnergyPreserved) {
  const auto m = read_fcidump(oracle::data_path("fcidump/lih_sto3g.fcidump"));
  const auto f = freeze_core(m, 1);
  EXPECT_EQ(f.n_orb, 5u);
  EXPECT_EQ(f.n_elec, 2u);
  // full: modes 0..3 occupied; frozen: modes 0..1 of the active space
  EXPECT_NEAR(oracle::determinant_energy(m, 0b1111), oracle::determinant_energy(f, 0b11), 1e-10);
  // an excited determinant that keeps the core doubly occupied
  EXPECT_NEAR(oracle::determinant_energy(m, 0b11 | (0b11 << 6)), oracle::determinant_energy(f, 0b11 << 4), 1e-10);
}

TEST(FrozenCore, NoTwoElectronTerms) {
  auto m = MolecularIntegrals::zeros(2, 2);
  m.h << -1.5, 0.2, 0.2, 0.3;
  const auto f = freeze_core(m, 1);
  EXPECT_DOUBLE_EQ(f.core_energy, 2.0 * -1.5);
  EXPECT_DOUBLE_EQ(f.h(0, 0), 0.3);
}

TEST(FrozenCore, Errors) {
  const auto m = read_fcidump(oracle::data_path("fcidump/h2_sto3g.fcidump"));
  EXPECT_THROW(freeze_core(m, -1), ConfigError);
  EXPECT_THROW(freeze_core(m, 2), ConfigError);
}
