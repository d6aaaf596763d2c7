#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "chamberkit/invariants.hpp"
#include "support.hpp"

using namespace ck;
using cktest::rat;

namespace {

// Representative of a face with every c_i < 1/2: pull the canonical
// representative towards the monotone point (stays on the same face).
FormClass small_representative(const FaceDescriptor& face) {
  int k = face.k;
  std::vector<Rat> c(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) {
    Rat ci = face.representative.blowup_area(i);
    c[static_cast<size_t>(i - 1)] = rat(1, 3) + (ci - rat(1, 3)) / 4;
  }
  return make_h_form(k, 1, c);
}

}  // namespace

TEST_CASE("analyze: small k examples") {
  auto r3 = analyze(make_h_form(3, 1, {rat(1, 3), rat(1, 3), rat(1, 3)}));
  CHECK(r3.pi0.torelli == Pi0Description::Trivial);
  CHECK(r3.pi0.quotient == dynkin_product(dynkin_a(1), dynkin_a(2)));
  CHECK(r3.pi1.exact);
  CHECK(r3.pi1.rank() == 2);
  CHECK(r3.q == 6);

  auto r4 = analyze(make_h_form(4, 1, {rat(5, 12), rat(4, 12), rat(2, 12), rat(1, 12)}));
  CHECK(r4.face.label == "MOABC");
  CHECK(r4.gamma_L.trivial());
  CHECK(r4.pi1.rank() == 10);
  CHECK(r4.q == 10);

  auto r1 = analyze(make_h_form(1, 1, {rat(1, 2)}));
  CHECK(r1.N == 0);
  CHECK(r1.pi1.rank() == 1);
  CHECK(r1.q == 1);
}

TEST_CASE("analyze: k = 5 trichotomy") {
  auto mono = analyze(make_h_form(5, 1, std::vector<Rat>(5, rat(1, 3))));
  CHECK(mono.pi0.torelli == Pi0Description::PB5ModCenter);
  CHECK(mono.pi1.exact);
  CHECK(mono.pi1.rank() == 0);
  CHECK(mono.q == 15);

  auto ma = analyze(make_h_form(5, 1, {rat(2, 5), rat(3, 10), rat(3, 10), rat(3, 10), rat(3, 10)}));
  CHECK(ma.pi0.torelli == Pi0Description::PB4ModCenter);
  CHECK_FALSE(ma.pi1.exact);
  CHECK(ma.pi1.lo == 5);
  CHECK(ma.pi1.hi == 9);
  CHECK_FALSE(ma.q_known);

  auto open5 = analyze(make_h_form(5, 1, {rat(9, 20), rat(6, 20), rat(4, 20), rat(3, 20), rat(2, 20)}));
  CHECK(open5.face.label == "MOABCD");
  CHECK(open5.pi0.torelli == Pi0Description::Trivial);
  CHECK(open5.pi1.rank() == 15);
  CHECK(open5.q == 15);

  auto mo = analyze(make_h_form(5, 1, std::vector<Rat>(5, rat(1, 4))));
  CHECK(mo.face.label == "MO");
  CHECK(mo.pi1.rank() == 5);
}

TEST_CASE("analyze reduces arbitrary classes internally") {
  std::mt19937 rng(808);
  for (int iter = 0; iter < 20; ++iter) {
    int k = 2 + iter % 4;
    FormClass w = cktest::random_reduced_h_form(k, rng);
    FormClass scrambled = cktest::weyl_scramble(w, rng, 7);
    auto a = analyze(scrambled);
    auto b = analyze(w);
    CHECK(a.face.label == b.face.label);
    CHECK(a.N == b.N);
    CHECK(a.pi1.rank() == b.pi1.rank());
  }
  // scale invariance: analyze normalizes internally
  auto scaled = analyze(make_h_form(5, rat(7, 3), std::vector<Rat>(5, rat(7, 9))));
  CHECK(scaled.face.label == "M");
  CHECK(scaled.q == 15);
  // degenerate classes are rejected with the blow-down named
  CHECK_THROWS_AS((void)analyze(make_h_form(3, 1, {rat(1, 2), rat(1, 2), rat(1, 2)})),
                  DomainError);
  CHECK_THROWS_AS((void)analyze(make_h_form(6, 1, std::vector<Rat>(6, rat(1, 4)))), DomainError);
}

TEST_CASE("analyze: BF input, including S^2 x S^2") {
  auto s2s2_mono = analyze(make_bf_form(0, 1, 1, {}));
  CHECK(s2s2_mono.gamma_L == dynkin_a(1));
  CHECK(s2s2_mono.pi1.rank() == 0);
  CHECK(s2s2_mono.q == 1);
  CHECK(s2s2_mono.pi1.note.find("Z2+Z2") != std::string::npos);

  auto s2s2 = analyze(make_bf_form(0, 2, 1, {}));
  CHECK(s2s2.gamma_L.trivial());
  CHECK(s2s2.pi1.rank() == 1);
  CHECK(s2s2.q == 1);

  // BF input with n >= 1 goes through the basis change
  auto bf = analyze(make_bf_form(2, rat(3, 2), 1, {rat(1, 2), rat(1, 4)}));
  CHECK(bf.face.k == 3);
}

TEST_CASE("Q-invariant is constant per manifold (Table 1)") {
  // k = 1: sample across the segment
  for (int i = 1; i <= 5; ++i)
    CHECK(q_invariant(make_h_form(1, 1, {rat(i, 6)})) == Int(1));
  const Int expected[] = {3, 6, 10};
  for (int k = 2; k <= 4; ++k)
    for (const auto& face : enumerate_faces(k))
      CHECK(q_invariant(face.representative) == expected[k - 2]);
  for (const auto& face : enumerate_faces(5)) {
    if (face.label == "MA") {
      CHECK_FALSE(q_invariant(face.representative).has_value());
    } else {
      CHECK(q_invariant(small_representative(face)) == Int(15));
    }
  }
}

TEST_CASE("pi_1 additivity and pi_0 order for k <= 4") {
  for (int k = 2; k <= 4; ++k) {
    Int mono_rank = monotone_pi1_rank(k);
    for (const auto& face : enumerate_faces(k)) {
      auto rep = analyze(face.representative);
      CHECK(rep.pi1.rank() - mono_rank == rep.N);
      CHECK(rep.pi0.quotient.weyl_order() == weyl_order(face.gamma_L));
      CHECK(weyl_order(ambient_type(k)) % weyl_order(face.gamma_L) == 0);
    }
  }
}

TEST_CASE("k = 5 trichotomy across all 32 faces") {
  int pb5 = 0, pb4 = 0, trivial = 0;
  for (const auto& face : enumerate_faces(5)) {
    auto rep = analyze(face.representative);
    switch (rep.pi0.torelli) {
      case Pi0Description::PB5ModCenter:
        ++pb5;
        CHECK(rep.N == 0);
        break;
      case Pi0Description::PB4ModCenter:
        ++pb4;
        CHECK(rep.N == 8);
        break;
      case Pi0Description::Trivial:
        ++trivial;
        CHECK(rep.N > 8);
        break;
      default:
        FAIL("unexpected Torelli classification");
    }
  }
  CHECK(pb5 == 1);
  CHECK(pb4 == 1);
  CHECK(trivial == 30);
}

TEST_CASE("per-face pi_1 ranks on c_i < 1/2 representatives") {
  std::map<std::string, int> expected = {
      {"MOABCD", 15},
      {"MOABC", 14}, {"MOABD", 14}, {"MOACD", 14}, {"MOBCD", 14}, {"MABCD", 14},
      {"MOAC", 13}, {"MOBC", 13}, {"MOBD", 13}, {"MABC", 13}, {"MACD", 13}, {"MBCD", 13},
      {"MOAB", 12}, {"MOAD", 12}, {"MOCD", 12}, {"MABD", 12}, {"MAC", 12}, {"MBC", 12},
      {"MOB", 11}, {"MOC", 11}, {"MBD", 11}, {"MCD", 11},
      {"MC", 10},
      {"MOA", 9}, {"MOD", 9}, {"MAD", 9}, {"MAB", 9},
      {"MB", 8},
      {"MO", 5}, {"MD", 5},
      {"M", 0},
  };
  for (const auto& face : enumerate_faces(5)) {
    FormClass rep = small_representative(face);
    auto r = analyze(rep);
    if (face.label == "MA") {
      CHECK_FALSE(r.pi1.exact);
      CHECK(r.pi1.lo == 5);
      CHECK(r.pi1.hi == 9);
      continue;
    }
    REQUIRE(expected.count(face.label) == 1);
    CHECK(r.pi1.exact);
    CHECK(r.pi1.rank() == expected[face.label]);
    // c_i < 1/2 certifies the rank: no hypothesis flag
    for (const auto& f : r.flags) CHECK(f.find("hypothesis") == std::string::npos);
  }
}

TEST_CASE("uncertified rank carries a hypothesis flag") {
  // MABC's canonical representative is non-balanced with c1 > 1/2
  for (const auto& face : enumerate_faces(5)) {
    if (face.label != "MABC") continue;
    REQUIRE(face.representative.blowup_area(1) > rat(1, 2));
    REQUIRE_FALSE(is_balanced(face.representative));
    auto r = analyze(face.representative);
    CHECK(r.pi1.exact);
    CHECK(r.pi1.rank() == 13);
    bool flagged = false;
    for (const auto& f : r.flags)
      if (f.find("hypothesis") != std::string::npos) flagged = true;
    CHECK(flagged);
    // Q still evaluates (the rank value itself is the theorem's)
    CHECK(r.q == 15);
  }
}

TEST_CASE("balanced forms with large c1 still certify the rank via the Cremona route") {
  // c1 > 1/2 but c2 < c3 + c4: the packing Cremona renormalizes below 1/2
  FormClass w = make_h_form(5, 1, {rat(52, 100), rat(30, 100), rat(17, 100), rat(17, 100),
                                   rat(17, 100)});
  REQUIRE(is_reduced(w));
  REQUIRE(w.blowup_area(1) > rat(1, 2));
  REQUIRE(is_balanced(w));
  auto r = analyze(w);
  CHECK(r.pi1.exact);
  for (const auto& f : r.flags) CHECK(f.find("hypothesis") == std::string::npos);
}

TEST_CASE("table rows match the published tables except for the known discrepancies") {
  // Table 3: full agreement
  for (const auto& row : table_rows(3)) CHECK(row.flags.empty());

  // Table 4: exactly MAC, MBC, MOAB disagree, and only in pi_1
  std::map<std::string, std::string> t4_flags;
  for (const auto& row : table_rows(4))
    for (const auto& f : row.flags) t4_flags[row.label] = f;
  CHECK(t4_flags.size() == 3);
  CHECK(t4_flags.count("MAC") == 1);
  CHECK(t4_flags.count("MBC") == 1);
  CHECK(t4_flags.count("MOAB") == 1);
  CHECK(t4_flags["MAC"].find("pi_1") != std::string::npos);

  // Table 5: exactly MC disagrees, and only in Gamma_L
  std::map<std::string, std::string> t5_flags;
  for (const auto& row : table_rows(5))
    for (const auto& f : row.flags) t5_flags[row.label] = f;
  CHECK(t5_flags.size() == 1);
  REQUIRE(t5_flags.count("MC") == 1);
  CHECK(t5_flags["MC"].find("Gamma_L") != std::string::npos);

  // N agrees with the published value in every row of every table
  for (int k = 3; k <= 5; ++k) {
    auto rows = table_rows(k);
    for (const auto& p : paper_table(k)) {
      bool found = false;
      for (const auto& row : rows)
        if (row.label == p.label) {
          CHECK(row.N == p.N);
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("k = 2 table") {
  auto rows = table_rows(2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].label == "OB");
  CHECK(rows[0].gamma == "A1");
  CHECK(rows[0].N == 0);
  CHECK(rows[0].pi1 == "Z^2");
  CHECK(rows[1].label == "BOA");
  CHECK(rows[1].gamma == "trivial");
  CHECK(rows[1].N == 1);
  CHECK(rows[1].pi1 == "Z^3");
  for (const auto& r : rows) CHECK(r.flags.empty());
}

TEST_CASE("emit_table formats") {
  auto text = emit_table(3, TableFormat::Text);
  CHECK(text.find("MOAB") != std::string::npos);
  auto md = emit_table(3, TableFormat::Markdown);
  CHECK(md.find("|---|") != std::string::npos);
  auto js = emit_table(3, TableFormat::Json);
  CHECK(js.find("\"label\":\"M\"") != std::string::npos);
  auto cmp = emit_table(4, TableFormat::Text, true);
  CHECK(cmp.find("paper") != std::string::npos);
  CHECK_THROWS_AS((void)emit_table(6, TableFormat::Text), DomainError);
}

TEST_CASE("analyze flags the MC row against the published table") {
  for (const auto& face : enumerate_faces(5)) {
    if (face.label != "MC") continue;
    auto rep = analyze(face.representative);
    bool flagged = false;
    for (const auto& f : rep.flags)
      if (f.find("A2xA2") != std::string::npos) flagged = true;
    CHECK(flagged);
    CHECK(rep.gamma_L == dynkin_product(dynkin_a(2), dynkin_product(dynkin_a(1), dynkin_a(1))));
  }
}
