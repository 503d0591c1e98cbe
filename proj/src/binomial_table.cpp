#include "degseq/binomial_table.hpp"

#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

constexpr int kRows = 200;

struct PascalTable {
  // Row n holds entries 0..floor(n/2); the rest come from symmetry.
  std::vector<std::vector<Int>> rows;

  PascalTable() {
    rows.resize(kRows + 1);
    for (int n = 0; n <= kRows; ++n) {
      rows[n].resize(n / 2 + 1);
      rows[n][0] = 1;
      for (int k = 1; k <= n / 2; ++k) {
        const Int& left = entry(n - 1, k - 1);
        const Int& right = entry(n - 1, k);
        rows[n][k] = left + right;
      }
    }
  }

  const Int& entry(int n, int k) const {
    if (k > n - k) k = n - k;
    return rows[n][k];
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

int pascal_rows() { return kRows; }

const Int& binom_small(int n, int k) {
  if (n < 0 || n > kRows || k < 0 || k > n)
    throw DomainError("binom_small argument out of range");
  return pascal().entry(n, k);
}

Int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  if (n <= kRows) return binom_small(static_cast<int>(n), static_cast<int>(k));
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace degseq
