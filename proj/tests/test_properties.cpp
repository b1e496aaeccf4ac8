#include <random>
#include <set>

#include "doctest.h"
#include "mutation.hpp"
#include "support.hpp"

using namespace hht;

TEST_SUITE("properties") {

TEST_CASE("derived Sweedler identities on every builtin coalgebra") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const AxiomReport r = check_hom_coalgebra(document_coalgebra(builtin_example(name)));
    CHECK(r.identity_passed("sweedler_five_fold"));
    CHECK(r.identity_passed("sweedler_four_fold"));
  }
  for (const auto& h : {drinfeld_double(hopf("sweedler-hom")), mirror_bicrossproduct(hopf("sweedler-hom"))}) {
    const AxiomReport r = check_hom_coalgebra(h.coalgebra());
    CHECK(r.identity_passed("sweedler_five_fold"));
    CHECK(r.identity_passed("sweedler_four_fold"));
  }
}

TEST_CASE("antipode is an anti-homomorphism on every builtin Hopf algebra") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const AxiomReport r = check_hopf(hopf(name));
    CHECK(r.identity_passed("antipode_anti_multiplicative"));
    CHECK(r.identity_passed("antipode_anti_comultiplicative"));
    CHECK(r.identity_passed("antipode_unit"));
    CHECK(r.identity_passed("antipode_counit"));
  }
}

TEST_CASE("every single-coefficient corruption of a builtin is caught") {
  std::mt19937 rng(20261017);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const AlgebraDocument doc = builtin_example(name);
    const std::set<std::string> baseline = failing(doc);
    std::size_t tried = 0, missed = 0;
    for (const Site& s : sites(doc)) {
      const AlgebraDocument mutant = corrupt(doc, s, random_nonzero(rng));
      ++tried;
      if (!caught_mutation(mutant, baseline)) {
        ++missed;
        std::string where = s.field;
        for (auto i : s.at) where += " " + std::to_string(i);
        CAPTURE(where);
        CHECK(false);
      }
    }
    MESSAGE(name << ": " << tried << " corruptions, " << missed << " missed");
    CHECK(tried > 0);
    CHECK(missed == 0);
  }
}

}  // TEST_SUITE
