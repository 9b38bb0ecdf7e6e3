#include "zetalab/prime_tools.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "zetalab/error.hpp"

namespace zetalab {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kSegmentBytes = 1u << 20;  // odd numbers per segment

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Exact integer k-th root (floor).
std::uint64_t iroot(std::uint64_t n, int k) {
  if (k == 1) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto pow_le = [&](std::uint64_t b) {
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= b;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void for_each_prime_segment(std::uint64_t limit, const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (limit < 2 || limit > kMaxSieveLimit) throw DomainError("sieve limit must lie in [2, 1e9]");
  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> base = small_primes(root);
  std::vector<std::uint32_t> found;
  found.push_back(2);
  visit(found);
  // segment covers odd numbers lo + 2i, i < kSegmentBytes
  std::vector<unsigned char> mark(kSegmentBytes);
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentBytes) {
    const std::uint64_t hi = std::min<std::uint64_t>(limit, lo + 2 * kSegmentBytes - 1);
    const std::uint64_t count = (hi - lo) / 2 + 1;
    std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (std::size_t bi = 1; bi < base.size(); ++bi) {
      const std::uint64_t p = base[bi];
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t j = start; j <= hi; j += 2 * p) mark[(j - lo) / 2] = 1;
    }
    found.clear();
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!mark[i]) found.push_back(static_cast<std::uint32_t>(lo + 2 * i));
    }
    visit(found);
  }
}

PrimeTable PrimeTable::sieve(std::uint64_t limit) {
  PrimeTable t;
  t.limit_ = limit;
  for_each_prime_segment(limit, [&](std::span<const std::uint32_t> seg) {
    t.primes_.insert(t.primes_.end(), seg.begin(), seg.end());
  });
  t.build_checkpoints();
  return t;
}

PrimeTable PrimeTable::from_primes(std::uint64_t limit, std::vector<std::uint32_t> primes) {
  PrimeTable t;
  t.limit_ = limit;
  t.primes_ = std::move(primes);
  t.build_checkpoints();
  return t;
}

void PrimeTable::build_checkpoints() {
  checkpoints_.assign(1, 0.0L);
  long double s = 0.0L;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    s += 1.0L / primes_[i];
    if ((i + 1) % kStride == 0) checkpoints_.push_back(s);
  }
}

std::size_t PrimeTable::count_upto(double x) const {
  if (x < 2.0) return 0;
  const double capped = std::min(x, static_cast<double>(limit_));
  const auto bound = static_cast<std::uint64_t>(std::floor(capped));
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
}

long double PrimeTable::reciprocal_sum(double x) const {
  if (x > static_cast<double>(limit_)) throw DomainError("reciprocal_sum beyond the sieve limit");
  const std::size_t n = count_upto(x);
  const std::size_t cp = n / kStride;
  long double s = checkpoints_[cp];
  for (std::size_t i = cp * kStride; i < n; ++i) s += 1.0L / primes_[i];
  return s;
}

std::uint64_t PrimeTable::nth(std::size_t n) const {
  if (n == 0 || n > primes_.size()) throw DomainError("prime index outside the sieved range");
  return primes_[n - 1];
}

std::optional<PrimeTable> load_prime_table(const std::filesystem::path& dir, std::uint64_t limit) {
  std::ifstream in(dir / "primes.bin", std::ios::binary);
  if (!in) return std::nullopt;
  std::uint64_t stored_limit = 0;
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&stored_limit), sizeof stored_limit);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!in || stored_limit < limit) return std::nullopt;
  std::vector<std::uint32_t> primes(count);
  in.read(reinterpret_cast<char*>(primes.data()), static_cast<std::streamsize>(count * sizeof(std::uint32_t)));
  if (!in) return std::nullopt;
  const auto keep = std::upper_bound(primes.begin(), primes.end(), limit);
  primes.erase(keep, primes.end());
  return PrimeTable::from_primes(limit, std::move(primes));
}

void save_prime_table(const std::filesystem::path& dir, const PrimeTable& table) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "primes.bin", std::ios::binary | std::ios::trunc);
  const std::uint64_t limit = table.limit();
  const std::uint64_t count = table.size();
  out.write(reinterpret_cast<const char*>(&limit), sizeof limit);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  out.write(reinterpret_cast<const char*>(table.primes().data()),
            static_cast<std::streamsize>(count * sizeof(std::uint32_t)));
}

PrimeUpperReport check_prime_upper(const PrimeTable& table, std::uint64_t n) {
  if (n < 6) throw DomainError("check_prime_upper requires n >= 6");
  if (n > table.size()) throw DomainError("n-th prime lies beyond the sieve limit");
  PrimeUpperReport r;
  r.n = n;
  r.nth_prime = table.nth(n);
  const double ln = std::log(static_cast<double>(n));
  r.bound = static_cast<double>(n) * (ln + std::log(ln));
  r.pass = static_cast<double>(r.nth_prime) < r.bound;
  return r;
}

double mertens_theta(const PrimeTable& table, double x) {
  if (!(x >= 2.0)) throw DomainError("mertens_theta requires x >= 2");
  if (x > static_cast<double>(table.limit())) throw DomainError("mertens_theta: x beyond the sieve limit");
  const long double lx = std::log(static_cast<long double>(x));
  const long double s = table.reciprocal_sum(x);
  return static_cast<double>((s - std::log(lx) - kMertensConstant) * lx * lx);
}

MangoldtValue lambda1(std::uint64_t n) {
  if (n < 2) throw DomainError("lambda1 requires n >= 2");
  MangoldtValue v;
  v.n = n;
  for (int k = 63; k >= 1; --k) {
    const std::uint64_t r = iroot(n, k);
    if (r < 2 || ipow(r, k) != n) continue;
    if (is_prime(r)) {
      v.prime = r;
      v.exponent = k;
      v.lambda1 = 1.0 / k;
      return v;
    }
  }
  return v;
}

}  // namespace zetalab
