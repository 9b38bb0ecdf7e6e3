#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace zetalab {

inline constexpr long double kMertensConstant = 0.2614972128476427837554268386L;
inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000ULL;

class PrimeTable {
 public:
  // Segmented sieve of Eratosthenes; 2 <= limit <= 1e9.
  static PrimeTable sieve(std::uint64_t limit);
  static PrimeTable from_primes(std::uint64_t limit, std::vector<std::uint32_t> primes);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::span<const std::uint32_t> primes() const { return primes_; }
  [[nodiscard]] std::size_t size() const { return primes_.size(); }
  // number of primes <= x
  [[nodiscard]] std::size_t count_upto(double x) const;
  // sum of 1/p over p <= x
  [[nodiscard]] long double reciprocal_sum(double x) const;
  // n-th prime, 1-based
  [[nodiscard]] std::uint64_t nth(std::size_t n) const;

 private:
  PrimeTable() = default;
  void build_checkpoints();

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
  std::vector<long double> checkpoints_;  // prefix sums of 1/p every kStride primes
  static constexpr std::size_t kStride = 1024;
};

// Calls visit(segment_primes) for each segment of the sieve, in order.
void for_each_prime_segment(std::uint64_t limit, const std::function<void(std::span<const std::uint32_t>)>& visit);

// Binary cache of a table inside dir; returns nullopt when absent or too small.
std::optional<PrimeTable> load_prime_table(const std::filesystem::path& dir, std::uint64_t limit);
void save_prime_table(const std::filesystem::path& dir, const PrimeTable& table);

struct PrimeUpperReport {
  std::uint64_t n = 0;
  std::uint64_t nth_prime = 0;
  double bound = 0.0;  // n (ln n + ln ln n)
  bool pass = false;
};
PrimeUpperReport check_prime_upper(const PrimeTable& table, std::uint64_t n);

// (sum_{p<=x} 1/p - ln ln x - Mertens) * ln^2 x
double mertens_theta(const PrimeTable& table, double x);

struct MangoldtValue {
  std::uint64_t n = 0;
  double lambda1 = 0.0;  // 1/k when n = p^k, else 0
  std::uint64_t prime = 0;
  int exponent = 0;
};
MangoldtValue lambda1(std::uint64_t n);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace zetalab
