#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dcolor/field.hpp"
#include "dcolor/params.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

// Nonzero entries in ascending index order.
struct SparseVector {
  std::vector<std::pair<Vertex, Fp>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

struct Measurement {
  std::uint32_t r = 0;
  std::vector<Fp> y;  // 2r Vandermonde syndromes
  std::vector<Fp> z;  // alpha check values
};

// Φ^R for one rate: an alpha x n matrix over F_p generated column by column
// from a counter-mode hash, never stored.
class RandomMatrix {
 public:
  RandomMatrix(std::uint64_t seed, std::uint32_t rows, Fp p) : seed_(seed), rows_(rows), p_(p) {}

  std::uint32_t rows() const { return rows_; }
  Fp p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  void column(Vertex u, Fp* out) const;
  std::vector<Fp> apply(const SparseVector& x) const;

 private:
  std::uint64_t seed_;
  std::uint32_t rows_;
  Fp p_;
};

// Minimal connection polynomial of s over F_p: c[0] = 1, degree = c.size()-1.
std::vector<Fp> berlekamp_massey(std::span<const Fp> s, Fp p);

// Recovers the unique r-sparse x over columns 0..n-1 with Φ^V x = meas, or nullopt.
std::optional<SparseVector> recover_sparse(std::span<const Fp> meas, std::uint32_t r, Fp p, std::size_t n);

bool verify_candidate(std::span<const Fp> check, const RandomMatrix& phi, const SparseVector& x);

std::optional<SparseVector> safe_recover(const Measurement& meas, Fp p, std::size_t n, const RandomMatrix& phi);

// Φ^V_r applied to a sparse vector: 2r syndromes.
std::vector<Fp> syndromes(const SparseVector& x, std::uint32_t r, Fp p);

class NotSampledError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Per-rate sampled vertex sets with their linear measurements of χ(N(v)).
class SketchBank {
 public:
  SketchBank(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed);

  void update(Edge e);

  std::size_t n() const { return n_; }
  Fp p() const { return p_; }
  std::uint32_t alpha() const { return alpha_; }
  const std::vector<std::uint32_t>& rates() const { return rates_; }
  std::size_t rate_count() const { return rates_.size(); }
  std::uint32_t rate(std::size_t k) const { return rates_[k]; }

  bool sampled(std::size_t k, Vertex v) const { return levels_[k].slot[v] >= 0; }
  std::size_t sampled_count(std::size_t k) const { return levels_[k].members; }
  const RandomMatrix& phi_r(std::size_t k) const { return levels_[k].phi; }

  std::span<const Fp> y(std::size_t k, Vertex v) const;
  std::span<const Fp> z(std::size_t k, Vertex v) const;

  // Φ^V_r χ(S) and Φ^R_r χ(S).
  std::vector<Fp> phi_v_of_set(std::size_t k, std::span<const Vertex> s) const;
  std::vector<Fp> phi_r_of_set(std::size_t k, std::span<const Vertex> s) const;

  // Measurement of χ(N(v)) − χ(S).
  Measurement measure_relative(Vertex v, std::size_t k, std::span<const Vertex> s) const;
  // Same, with Φ^V χ(S), Φ^R χ(S) precomputed.
  Measurement measure_relative(Vertex v, std::size_t k, std::span<const Fp> phi_v_s,
                               std::span<const Fp> phi_r_s) const;

  std::optional<SparseVector> recover(const Measurement& m, std::size_t k) const;

  std::size_t stored_elements() const;
  std::size_t stored_bits() const;

  void write_dump(std::ostream& out) const;

 private:
  struct Level {
    std::vector<std::int32_t> slot;
    std::vector<Fp> y;
    std::vector<Fp> z;
    std::size_t members = 0;
    RandomMatrix phi{0, 0, 0};
  };

  void add_neighbor(Vertex w, Vertex other, const Fp* powers);

  std::size_t n_;
  Fp p_;
  std::uint32_t alpha_;
  std::vector<std::uint32_t> rates_;
  std::vector<Level> levels_;
  std::vector<Fp> scratch_powers_;
  std::vector<Fp> scratch_col_;
};

std::vector<std::uint32_t> sketch_rates(std::uint32_t delta);

}  // namespace dcolor
