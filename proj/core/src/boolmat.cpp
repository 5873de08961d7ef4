#include "bmat/boolmat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace bmat {

namespace {

constexpr int kW = Bitset::kWordBits;

std::uint64_t tail_mask(int cols) {
  int rem = cols % kW;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BoolMatrix::BoolMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), row_words_(Bitset::word_count(cols)) {
  require(rows >= 1 && cols >= 1, "BoolMatrix: dimensions must be at least 1x1");
  bits_.assign(static_cast<std::size_t>(rows_) * row_words_, 0);
}

BoolMatrix BoolMatrix::ones(int rows, int cols) {
  BoolMatrix m(rows, cols);
  std::uint64_t last = tail_mask(cols);
  for (int i = 0; i < rows; ++i) {
    auto r = m.row_span(i);
    for (int w = 0; w < m.row_words_; ++w) r[w] = ~std::uint64_t{0};
    r[m.row_words_ - 1] = last;
  }
  return m;
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<std::string> v;
  v.reserve(rows.size());
  for (auto r : rows) v.emplace_back(r);
  return from_strings(v);
}

BoolMatrix BoolMatrix::from_strings(const std::vector<std::string>& rows) {
  require(!rows.empty() && !rows.front().empty(), "from_strings: empty matrix");
  BoolMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == m.cols(),
            "from_strings: ragged rows");
    for (int j = 0; j < m.cols(); ++j) {
      char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require(c == '0' || c == '1', "from_strings: entries must be 0 or 1");
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

void BoolMatrix::set(int i, int j, bool v) {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "set: index out of range");
  std::uint64_t bit = std::uint64_t{1} << (static_cast<unsigned>(j) % kW);
  std::uint64_t& w = bits_[static_cast<std::size_t>(i) * row_words_ + j / kW];
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

Bitset BoolMatrix::row(int i) const {
  Bitset b(cols_);
  auto src = row_span(i);
  std::copy(src.begin(), src.end(), b.words().begin());
  return b;
}

Bitset BoolMatrix::col(int j) const {
  Bitset b(rows_);
  for (int i = 0; i < rows_; ++i)
    if (at(i, j)) b.set(i);
  return b;
}

bool BoolMatrix::rows_intersect(int i, int j) const {
  auto a = row_span(i);
  auto b = row_span(j);
  for (int w = 0; w < row_words_; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

long long BoolMatrix::count_ones() const {
  long long c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

bool BoolMatrix::is_zero() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

bool BoolMatrix::all_ones() const {
  std::uint64_t last = tail_mask(cols_);
  for (int i = 0; i < rows_; ++i) {
    auto r = row_span(i);
    for (int w = 0; w + 1 < row_words_; ++w)
      if (r[w] != ~std::uint64_t{0}) return false;
    if (r[row_words_ - 1] != last) return false;
  }
  return true;
}

std::size_t BoolMatrix::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::size_t>(rows_) << 20) ^
                  static_cast<std::size_t>(cols_);
  for (auto w : bits_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  require(!map_.empty(), "Permutation: empty map");
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    require(v >= 0 && v < static_cast<int>(map_.size()) && !seen[static_cast<std::size_t>(v)],
            "Permutation: map is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(map_.size());
  for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "Permutation: size mismatch");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(v));
}

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
  require(a.cols() == b.rows(), "multiply: inner dimensions differ");
  BoolMatrix c(a.rows(), b.cols());
  const int bw = b.row_words();
  for (int i = 0; i < a.rows(); ++i) {
    auto arow = a.row_span(i);
    auto crow = c.row_span(i);
    for (int w = 0; w < a.row_words(); ++w) {
      std::uint64_t bits = arow[w];
      while (bits) {
        int t = w * Bitset::kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        auto brow = b.row_span(t);
        for (int k = 0; k < bw; ++k) crow[k] |= brow[k];
      }
    }
  }
  return c;
}

BoolMatrix add(const BoolMatrix& a, const BoolMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add: dimensions differ");
  BoolMatrix c = a;
  for (int i = 0; i < a.rows(); ++i) {
    auto crow = c.row_span(i);
    auto brow = b.row_span(i);
    for (int w = 0; w < a.row_words(); ++w) crow[w] |= brow[w];
  }
  return c;
}

BoolMatrix transpose(const BoolMatrix& a) {
  BoolMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    auto arow = a.row_span(i);
    for (int w = 0; w < a.row_words(); ++w) {
      std::uint64_t bits = arow[w];
      while (bits) {
        int j = w * Bitset::kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        t.set(j, i);
      }
    }
  }
  return t;
}

BoolMatrix power(const BoolMatrix& a, long long k) {
  require(a.is_square(), "power: matrix must be square");
  require(k >= 0, "power: exponent must be nonnegative");
  BoolMatrix result = BoolMatrix::identity(a.rows());
  BoolMatrix base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

BoolMatrix permute_sym(const BoolMatrix& a, const Permutation& p) {
  require(a.is_square(), "permute_sym: matrix must be square");
  require(p.size() == a.rows(), "permute_sym: permutation size mismatch");
  BoolMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(p(i), p(j))) r.set(i, j);
  return r;
}

bool dominates(const BoolMatrix& a, const BoolMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "dominates: dimensions differ");
  for (int i = 0; i < a.rows(); ++i) {
    auto arow = a.row_span(i);
    auto brow = b.row_span(i);
    for (int w = 0; w < a.row_words(); ++w)
      if (brow[w] & ~arow[w]) return false;
  }
  return true;
}

bool has_zero_line(const BoolMatrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    auto r = a.row_span(i);
    bool nonzero = false;
    for (int w = 0; w < a.row_words(); ++w) nonzero = nonzero || r[w];
    if (!nonzero) return true;
  }
  std::vector<bool> colhit(static_cast<std::size_t>(a.cols()), false);
  for (int i = 0; i < a.rows(); ++i) {
    auto r = a.row_span(i);
    for (int w = 0; w < a.row_words(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        colhit[static_cast<std::size_t>(w * Bitset::kWordBits + std::countr_zero(bits))] = true;
        bits &= bits - 1;
      }
    }
  }
  return !std::all_of(colhit.begin(), colhit.end(), [](bool b) { return b; });
}

BoolMatrix submatrix(const BoolMatrix& a, std::span<const int> rowset,
                     std::span<const int> colset) {
  require(!rowset.empty() && !colset.empty(), "submatrix: index lists must be nonempty");
  for (int i : rowset) require(i >= 0 && i < a.rows(), "submatrix: row index out of range");
  for (int j : colset) require(j >= 0 && j < a.cols(), "submatrix: column index out of range");
  BoolMatrix s(static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (a.at(rowset[static_cast<std::size_t>(i)], colset[static_cast<std::size_t>(j)]))
        s.set(i, j);
  return s;
}

BoolMatrix read_matrix(std::istream& in) {
  auto next_line = [&](std::string& line) -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;  // blank
      if (line[first] == '#') continue;          // comment
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw ParseError("matrix text: missing header line");
  std::istringstream header(line);
  long long rows = 0, cols = 0;
  if (!(header >> rows >> cols)) throw ParseError("matrix text: header must be \"ROWS COLS\"");
  std::string trailing;
  if (header >> trailing) throw ParseError("matrix text: trailing tokens after header");
  if (rows < 1 || cols < 1) throw ParseError("matrix text: dimensions must be at least 1");
  if (rows > 4096 || cols > 4096) throw ParseError("matrix text: dimensions too large");

  BoolMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < m.rows(); ++i) {
    if (!next_line(line)) throw ParseError("matrix text: fewer rows than declared");
    int j = 0;
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      if (c != '0' && c != '1') throw ParseError("matrix text: entries must be 0 or 1");
      if (j >= m.cols()) throw ParseError("matrix text: row longer than declared");
      if (c == '1') m.set(i, j);
      ++j;
    }
    if (j != m.cols()) throw ParseError("matrix text: row shorter than declared");
  }
  return m;
}

BoolMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const BoolMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (m.at(i, j) ? '1' : '0');
    out << '\n';
  }
}

std::string to_text(const BoolMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace bmat
