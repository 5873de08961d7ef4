#include "bmat/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string_view>

namespace bmat {
namespace {

// The 21 rank-2 block patterns, transcribed row by row in source order.
const std::vector<std::vector<std::string_view>> kTable2 = {
    {"010", "101", "101"},
    {"010", "101", "111"},
    {"0100", "1011", "1011", "1111"},
};

const std::vector<std::vector<std::string_view>> kTable3 = {
    {"1100", "0011", "1100", "0011"},
    {"11001", "00110", "11001", "00110", "11111"},
    {"11000", "00111", "11000", "00111", "11111"},
    {"110010", "001101", "110010", "001101", "111111", "111111"},
    {"110", "001", "111"},
    {"1101", "0010", "1111", "1111"},
    {"1100", "0011", "1111", "1100"},
    {"1100", "0011", "1111", "0011"},
    {"11010", "00101", "11111", "11111", "11010"},
    {"11010", "00101", "11111", "11111", "00101"},
    {"111", "100", "011"},
    {"1111", "1001", "0110", "1001"},
    {"1111", "1001", "0110", "0110"},
    {"1111", "1000", "0111", "1111"},
    {"11111", "10010", "01101", "10010", "11111"},
    {"11111", "10010", "01101", "01101", "11111"},
    {"1111", "1111", "1010", "0101"},
    {"1111", "1111", "0101", "1010"},
};

BoolMatrix pattern_from(const std::vector<std::string_view>& rows) {
  const int n = static_cast<int>(rows.size());
  BoolMatrix p = BoolMatrix::zeros(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::logic_error("pattern_from: ragged pattern literal");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] == '1') p.set(i, j, true);
    }
  }
  return p;
}

void require_sizes(const std::vector<int>& sizes, int expected, const char* what) {
  if (static_cast<int>(sizes.size()) != expected) {
    throw std::invalid_argument(std::string(what) + ": wrong number of block sizes");
  }
  long long total = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument(std::string(what) + ": block sizes must be >= 1");
    total += s;
  }
  if (total > 4096) {
    throw std::invalid_argument(std::string(what) + ": expanded matrix too large");
  }
}

const std::vector<std::vector<std::string_view>>& fixed_table(FamilyKind kind) {
  if (kind == FamilyKind::t2) return kTable2;
  if (kind == FamilyKind::t3) return kTable3;
  throw std::invalid_argument("table23: kind must be t2 or t3");
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::wielandt: return "wielandt";
    case FamilyKind::all_ones: return "jn";
    case FamilyKind::m1: return "m1";
    case FamilyKind::m2: return "m2";
    case FamilyKind::m3: return "m3";
    case FamilyKind::t2: return "t2";
    case FamilyKind::t3: return "t3";
  }
  throw std::logic_error("family_name: bad kind");
}

BoolMatrix wielandt(int n) {
  if (n < 2) throw std::invalid_argument("wielandt: n must be >= 2");
  BoolMatrix w = BoolMatrix::zeros(n, n);
  for (int i = 0; i + 1 < n; ++i) w.set(i, i + 1, true);
  w.set(n - 2, 0, true);
  w.set(n - 1, 0, true);
  return w;
}

BoolMatrix expand_pattern(const PatternMatrix& pattern, const std::vector<int>& sizes) {
  if (pattern.rows() != pattern.cols()) {
    throw std::invalid_argument("expand_pattern: pattern must be square");
  }
  require_sizes(sizes, pattern.rows(), "expand_pattern");
  std::vector<int> offset(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), offset.begin() + 1);
  const int n = offset.back();
  BoolMatrix m = BoolMatrix::zeros(n, n);
  for (int bi = 0; bi < pattern.rows(); ++bi) {
    for (int bj = 0; bj < pattern.cols(); ++bj) {
      if (!pattern.at(bi, bj)) continue;
      for (int i = offset[bi]; i < offset[bi + 1]; ++i) {
        for (int j = offset[bj]; j < offset[bj + 1]; ++j) m.set(i, j, true);
      }
    }
  }
  return m;
}

PatternMatrix table1_pattern(FamilyKind kind, int b) {
  if (kind != FamilyKind::m1 && kind != FamilyKind::m2 && kind != FamilyKind::m3) {
    throw std::invalid_argument("table1_pattern: kind must be m1, m2 or m3");
  }
  if (b < 3) throw std::invalid_argument("table1_pattern: b must be >= 3");
  const int dim = b + (kind == FamilyKind::m3 ? 2 : 1);
  BoolMatrix p = BoolMatrix::zeros(dim, dim);
  for (int i = 0; i + 1 < b; ++i) p.set(i, i + 1, true);  // principal cycle path
  p.set(b - 1, 0, true);                                  // cycle closes
  p.set(b - 3, b, true);  // block row b-2 (1-based) feeds the first extra block
  if (kind == FamilyKind::m3) p.set(b - 3, b + 1, true);
  p.set(b, 0, true);  // first extra block maps back to block 1
  if (kind == FamilyKind::m2) p.set(b, b - 1, true);
  if (kind == FamilyKind::m3) {
    p.set(b + 1, 0, true);
    p.set(b + 1, b - 1, true);
  }
  return p;
}

PatternMatrix table23_pattern(FamilyKind kind, int variant) {
  const auto& table = fixed_table(kind);
  if (variant < 1 || variant > static_cast<int>(table.size())) {
    throw std::invalid_argument("table23_pattern: variant out of range");
  }
  return pattern_from(table[static_cast<std::size_t>(variant - 1)]);
}

BoolMatrix table1(FamilyKind kind, int b, const std::vector<int>& sizes) {
  return expand_pattern(table1_pattern(kind, b), sizes);
}

BoolMatrix table23(FamilyKind kind, int variant, const std::vector<int>& sizes) {
  return expand_pattern(table23_pattern(kind, variant), sizes);
}

Factorization table1_factorization(FamilyKind kind, int b,
                                   const std::vector<int>& sizes) {
  const PatternMatrix pattern = table1_pattern(kind, b);  // validates kind and b
  require_sizes(sizes, pattern.rows(), "table1_factorization");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Factorization f{BoolMatrix::zeros(n, b), BoolMatrix::zeros(b, n), b};
  // Block row i of A repeats one indicator row; block column i of B repeats
  // one indicator column. The extra blocks reuse row b-1 of B and map to
  // column 0 of A (m2 and m3's second extra also to column b-1).
  int row = 0;
  auto fill_a = [&](int size, std::initializer_list<int> cols) {
    for (int r = 0; r < size; ++r, ++row) {
      for (int c : cols) f.a.set(row, c, true);
    }
  };
  int col = 0;
  auto fill_b = [&](int size, int source_row) {
    for (int c = 0; c < size; ++c, ++col) f.b.set(source_row, col, true);
  };
  for (int i = 0; i < b; ++i) {
    fill_a(sizes[static_cast<std::size_t>(i)], {(i + 1) % b});
    fill_b(sizes[static_cast<std::size_t>(i)], i);
  }
  const int extra = sizes[static_cast<std::size_t>(b)];
  if (kind == FamilyKind::m1) {
    fill_a(extra, {0});
    fill_b(extra, b - 2);
  } else if (kind == FamilyKind::m2) {
    fill_a(extra, {0, b - 1});
    fill_b(extra, b - 2);
  } else {
    fill_a(extra, {0});
    fill_b(extra, b - 2);
    const int extra2 = sizes[static_cast<std::size_t>(b + 1)];
    fill_a(extra2, {0, b - 1});
    fill_b(extra2, b - 2);
  }
  return f;
}

int block_count(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::wielandt:
    case FamilyKind::all_ones:
      return 0;
    case FamilyKind::m1:
    case FamilyKind::m2:
      return spec.b + 1;
    case FamilyKind::m3:
      return spec.b + 2;
    case FamilyKind::t2:
    case FamilyKind::t3:
      return table23_pattern(spec.kind, spec.variant).rows();
  }
  throw std::logic_error("block_count: bad kind");
}

BoolMatrix generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::wielandt:
      return wielandt(spec.b);
    case FamilyKind::all_ones:
      if (spec.b < 1) throw std::invalid_argument("generate: jn needs n >= 1");
      if (spec.b > 4096) throw std::invalid_argument("generate: jn too large");
      return BoolMatrix::ones(spec.b, spec.b);
    case FamilyKind::m1:
    case FamilyKind::m2:
    case FamilyKind::m3:
    case FamilyKind::t2:
    case FamilyKind::t3: {
      PatternMatrix pattern =
          (spec.kind == FamilyKind::t2 || spec.kind == FamilyKind::t3)
              ? table23_pattern(spec.kind, spec.variant)
              : table1_pattern(spec.kind, spec.b);
      std::vector<int> sizes = spec.block_sizes;
      if (sizes.empty()) sizes.assign(static_cast<std::size_t>(pattern.rows()), 1);
      return expand_pattern(pattern, sizes);
    }
  }
  throw std::logic_error("generate: bad kind");
}

}  // namespace bmat
