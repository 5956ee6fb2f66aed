#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "wrightlens/laurent.hpp"

using namespace wrightlens;
using cd = std::complex<double>;

namespace {

bool same(const Laurent& a, const Laurent& b, double tol = 0.0) {
  if (a.truncation() != b.truncation()) return false;
  if (std::abs(a.principal() - b.principal()) > tol) return false;
  for (int n = 1; n <= a.truncation(); ++n) {
    if (std::abs(a.coeff(n) - b.coeff(n)) > tol) return false;
  }
  return true;
}

Laurent random_series(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  ComplexVector<double> c(n);
  for (int i = 0; i < n; ++i) c[i] = cd(u(rng), u(rng));
  return Laurent(c);
}

}  // namespace

TEST_CASE("hadamard examples") {
  CHECK(same(hadamard(Laurent{cd(1)}, Laurent{cd(2)}), Laurent{cd(2)}));
  const Laurent g{cd(3), cd(-1, 2)};
  const Laurent h = hadamard(Laurent::pole(), g);
  CHECK(h.truncation() == 0);
  CHECK(h.principal() == cd(1));
  CHECK(same(hadamard(Laurent{cd(1), cd(1)}, g), g));
}

TEST_CASE("hadamard is commutative and associative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Laurent a = random_series(rng, 12), b = random_series(rng, 12),
                  c = random_series(rng, 12);
    CHECK(same(hadamard(a, b), hadamard(b, a)));
    CHECK(same(hadamard(hadamard(a, b), c), hadamard(a, hadamard(b, c)), 1e-15));
  }
}

TEST_CASE("binary operations truncate to the shorter operand") {
  const Laurent a{cd(1), cd(2), cd(3)};
  const Laurent b{cd(5)};
  CHECK(hadamard(a, b).truncation() == 1);
  CHECK((a + b).truncation() == 1);
  CHECK((a + b).coeff(1) == cd(6));
  CHECK((a + b).principal() == cd(2));
}

TEST_CASE("apply_operator examples") {
  CHECK(apply_operator(Wright::make(0, 1), Laurent::pole()).truncation() == 0);
  CHECK(same(apply_operator(Wright::make(0, 1), Laurent{cd(1), cd(1)}),
             Laurent{cd(1), cd(0.5)}, 1e-15));
  CHECK(same(apply_operator(Wright::make(1, 1), Laurent{cd(0), cd(1)}),
             Laurent{cd(0), cd(0.25)}, 1e-15));
}

TEST_CASE("apply_operator is the Hadamard product with the Wright kernel") {
  std::mt19937_64 rng(11);
  for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {0.5, 1.5}}) {
    const Wright wp = Wright::make(a, b);
    const Laurent f = random_series(rng, 20);
    CHECK(same(apply_operator(wp, f), hadamard(wright_kernel(wp, 20), f)));
    for (int n = 1; n <= 20; ++n) {
      CHECK(std::abs(wright_kernel(wp, 20).coeff(n) - oracle::phi(a, b, n)) <
            1e-12 * oracle::phi(a, b, n));
    }
  }
}

TEST_CASE("z_derivative examples") {
  CHECK(same(z_derivative(Laurent::pole()), Laurent(ComplexVector<double>(0), cd(-1))));
  CHECK(same(z_derivative(Laurent{cd(1)}), Laurent({cd(1)}, cd(-1))));
  CHECK(same(z_derivative(Laurent{cd(0), cd(3)}), Laurent({cd(0), cd(6)}, cd(-1))));
}

TEST_CASE("z_derivative agrees with a central difference") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  const double h = 1e-5;
  for (int t = 0; t < 20; ++t) {
    const Laurent f = random_series(rng, 8);
    const cd z = std::polar(0.2 + 0.6 * u(rng), 6.28 * u(rng));
    const cd fd = (eval(f, z + h) - eval(f, z - h)) / (2 * h) * z;
    CHECK(std::abs(fd - eval(z_derivative(f), z)) < 1e-6);
  }
}

TEST_CASE("lambda_mix examples") {
  const Laurent f{cd(0), cd(1)};
  CHECK(same(lambda_mix(f, 0.0), f));
  CHECK(lambda_mix(Laurent::pole(), 0.25).principal() == cd(0.5));
  CHECK(same(lambda_mix(f, 0.25), Laurent({cd(0), cd(1.25)}, cd(0.5))));
  for (double lam : {0.0, 0.1, 0.2, 0.3, 0.45, 0.49}) {
    CHECK(lambda_mix(f, lam).principal() == cd(1 - 2 * lam));
  }
}

TEST_CASE("eval examples") {
  CHECK(eval(Laurent::pole(), cd(0.5)) == cd(2));
  CHECK(std::abs(eval(Laurent{cd(1)}, cd(0.5)) - cd(2.5)) < 1e-15);
  CHECK(std::abs(eval(Laurent{cd(1), cd(1)}, cd(0, 0.5)) - cd(-0.25, -1.5)) < 1e-15);
}

TEST_CASE("eval outside the punctured disk") {
  CHECK_THROWS_AS(eval(Laurent::pole(), cd(0)), DomainError);
  CHECK_THROWS_AS(eval(Laurent::pole(), cd(1)), DomainError);
  CHECK_THROWS_AS(eval(Laurent::pole(), cd(0.8, 0.8)), DomainError);
}

TEST_CASE("non-finite coefficients are rejected") {
  CHECK_THROWS_AS(Laurent({cd(NAN)}), ParameterError);
  CHECK_THROWS_AS(Laurent({cd(1)}, cd(INFINITY)), ParameterError);
  CHECK_THROWS_AS(Taylor({cd(1), cd(NAN)}), ParameterError);
}

TEST_CASE("Taylor products and quotients") {
  const Taylor one = Taylor::constant(1.0, 6);
  const Taylor w{cd(0), cd(0.5)};
  const Taylor geometric = one / (one - Taylor{cd(0), cd(0.5), cd(0), cd(0), cd(0), cd(0), cd(0)});
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(geometric[k] - std::pow(0.5, k)) < 1e-15);
  const Taylor sq = w * w;
  CHECK(sq.order() == 1);
  const Taylor a{cd(1), cd(2, 1), cd(-3), cd(0.5)};
  const Taylor b{cd(2), cd(0, 1), cd(1), cd(1)};
  const Taylor back = (a * b) / b;
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(back[k] - a[k]) < 1e-14);
  CHECK(std::abs((a - a)[2]) == 0.0);
  CHECK(std::abs((cd(2) * a)[1] - cd(4, 2)) == 0.0);
  CHECK(std::abs(a.eval(cd(0.5)) - (1.0 + cd(2, 1) * 0.5 - 3.0 * 0.25 + 0.5 * 0.125)) < 1e-15);
  CHECK_THROWS(one / Taylor{cd(0), cd(1)});
}
