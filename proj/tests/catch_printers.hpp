#ifndef A2CK_TESTS_CATCH_PRINTERS_HPP
#define A2CK_TESTS_CATCH_PRINTERS_HPP

#include <catch2/catch_amalgamated.hpp>

#include "a2ck/zmat.hpp"

namespace Catch {

template <>
struct StringMaker<mpz_class> {
  static std::string convert(const mpz_class& v) { return v.get_str(); }
};

template <>
struct StringMaker<a2ck::FinAbGroup> {
  static std::string convert(const a2ck::FinAbGroup& g) {
    return g.invariant_string();
  }
};

}  // namespace Catch

#endif
