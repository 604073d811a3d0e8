#pragma once

// Binary Alternant codes from Goppa polynomials: Goppa codes, their parity-check (even-weight)
// subcodes, and extended Goppa codes, with quasi-cyclic verification.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcgoppa/invariant.hpp"
#include "qcgoppa/polyring.hpp"
#include "qcgoppa/projline.hpp"

namespace qcgoppa {

enum class Variant { goppa, parity_check_subcode, extended };

std::string_view variant_name(Variant v) noexcept;
Variant parse_variant(std::string_view s);

struct SupportSpec {
  FieldCtx ctx;
  std::vector<Orbit> blocks;
  Variant variant = Variant::goppa;

  std::vector<ProjPoint> points() const { return flatten(blocks); }
  std::size_t length() const;
  bool includes_infinity() const;
};

struct GoppaSpec {
  Poly g;
  SupportSpec support;
  std::optional<Mobius> A;
};

/// Dense matrix over a field, row-major.
struct FieldMatrix {
  FieldCtx ctx;
  std::size_t rows = 0, cols = 0;
  std::vector<Fe> entries;

  const Fe& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Fe& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v);
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  void append_row(const std::uint64_t* bits);
  std::size_t row_weight(std::size_t r) const;

  /// One line of '0'/'1' per row.
  std::string dump() const;
  static BinMatrix parse(std::string_view text);

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// goppa: H_r(v, L); parity_check_subcode: H_{r+1}(v, L); extended: H_{r+1} with the infinity
/// column (0, ..., 0, 1/g_r). v_i = g(alpha_i)^-1. Throws RootInSupport, InvalidSupport.
FieldMatrix parity_check_matrix(const Poly& g, const std::vector<ProjPoint>& support, Variant variant);
FieldMatrix parity_check_matrix(const GoppaSpec& spec);

/// Each entry becomes its m polynomial-basis coordinates (bit b in row block*m + b).
BinMatrix binary_expand(const FieldMatrix& H);

/// Reduced row-echelon form, in place; returns pivot columns.
std::vector<std::size_t> rref(BinMatrix& M);
/// Reduced row-echelon basis of the right kernel. Throws ScaleExceeded above 128 columns.
BinMatrix kernel_basis(const BinMatrix& B);
/// True iff every row of G is orthogonal to every row of H.
bool orthogonal(const BinMatrix& G, const BinMatrix& H);
bool same_row_space(const BinMatrix& a, const BinMatrix& b);
/// Row space of a lies inside row space of b.
bool row_space_contains(const BinMatrix& b, const BinMatrix& a);

/// Exact minimum weight by Gray-code enumeration; dimension <= 20 (else ScaleExceeded).
/// Results do not depend on the thread count.
unsigned min_distance_exhaustive(const BinMatrix& G, unsigned threads = 1);

struct QcBlocks {
  std::size_t l = 0;
  std::size_t tau = 0;
};

struct CodeReport {
  Variant variant = Variant::goppa;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::optional<QcBlocks> qc;
  bool automorphism_verified = false;
  std::optional<unsigned> min_distance;
  FieldCtx ctx;
  Poly g;
  std::vector<ProjPoint> support;
  BinMatrix G;  // generator, reduced row-echelon
  BinMatrix H;  // binary parity check
};

struct BuildOptions {
  bool compute_min_distance = true;
  unsigned threads = 1;
};

/// Builds the code and, when spec.A is present, verifies the induced permutation is an automorphism.
/// Throws OrbitNotUniform when a block is not a full A-orbit of size ord(A).
CodeReport build_code(const GoppaSpec& spec, const BuildOptions& opts = {});

/// (A^-1(L), (x+d)^r g(A(x))). With r + 1 rows (subcode variant) the binary code is unchanged;
/// the r-row Goppa code generally is not.
GoppaSpec support_transform(const GoppaSpec& spec, const Mobius& A);

/// U_n in GF(q^2) split into A-orbits with fixed points removed. Throws NonDivisor, NotClosed.
SupportSpec unit_group_support(const FieldCtx& ctx_q2, std::uint64_t n, const Mobius& A);

/// Orbits of A on the projective line with fixed points removed; optionally drops the orbit of infinity.
std::vector<Orbit> nontrivial_orbits(const Mobius& A, bool keep_infinity);

}  // namespace qcgoppa
