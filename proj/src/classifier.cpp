#include "hnlie/classifier.hpp"

#include <algorithm>
#include <mutex>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

constexpr std::size_t kComponents = Tensor3::kSize;

std::size_t flat(int i, int j, int k) {
  return static_cast<std::size_t>(16 * (i - 1) + 4 * (j - 1) + (k - 1));
}

const Scalar& entry(const Matrix& m, int r, int c) {
  return m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
}

Matrix from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), kComponents);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < kComponents; ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<Tensor3> as_tensors(const std::vector<Vector>& vectors) {
  std::vector<Tensor3> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(Tensor3::from_flat(v));
  return out;
}

Matrix columns_of(const std::vector<Tensor3>& tensors) {
  std::vector<Vector> cols;
  for (const auto& t : tensors) cols.push_back(t.flat());
  return Matrix::from_columns(cols, kComponents);
}

std::vector<Tensor3> kernel_tensors(const Matrix& constraints) { return as_tensors(kernel(constraints)); }

std::vector<int> class_numbers(int alpha) {
  return alpha == 1 ? std::vector<int>{2, 4} : std::vector<int>{1, 2, 3};
}

}  // namespace

const AdmissibleSpace::ClassSubspace* AdmissibleSpace::find(const std::string& name) const {
  for (const auto& c : classes)
    if (c.name == name) return &c;
  return nullptr;
}

Matrix symmetry_constraints(int alpha, const HNStructure& h) {
  const Matrix& J = h.j(alpha);
  const Scalar e(h.epsilon(alpha));
  std::vector<Vector> rows;
  for (int x = 1; x <= kDim; ++x)
    for (int y = 1; y <= kDim; ++y)
      for (int z = 1; z <= kDim; ++z) {
        // F(x,y,z) + eps F(x,z,y) = 0
        Vector swap(kComponents);
        swap[flat(x, y, z)] += 1;
        swap[flat(x, z, y)] += e;
        rows.push_back(std::move(swap));
        // F(x,y,z) + eps F(x,Jy,Jz) = 0
        Vector twisted(kComponents);
        twisted[flat(x, y, z)] += 1;
        for (int p = 1; p <= kDim; ++p)
          for (int q = 1; q <= kDim; ++q) {
            const Scalar w = entry(J, p, y) * entry(J, q, z);
            if (!w.is_zero()) twisted[flat(x, p, q)] += e * w;
          }
        rows.push_back(std::move(twisted));
      }
  return from_rows(rows);
}

Matrix cyclic_sum_operator(int alpha, const HNStructure& h, bool twisted) {
  const Matrix& J = h.j(alpha);
  std::vector<Vector> rows;
  for (int x = 1; x <= kDim; ++x)
    for (int y = 1; y <= kDim; ++y)
      for (int z = 1; z <= kDim; ++z) {
        Vector row(kComponents);
        const std::array<std::array<int, 3>, 3> cyc{{{x, y, z}, {y, z, x}, {z, x, y}}};
        for (const auto& [u, v, w] : cyc) {
          if (!twisted) {
            row[flat(u, v, w)] += 1;
            continue;
          }
          for (int p = 1; p <= kDim; ++p)
            if (!entry(J, p, w).is_zero()) row[flat(u, v, p)] += entry(J, p, w);
        }
        rows.push_back(std::move(row));
      }
  return from_rows(rows);
}

Matrix lee_operator(const HNStructure& h) {
  const Matrix ginv = metric_inverse(h);
  std::vector<Vector> rows;
  for (int k = 1; k <= kDim; ++k) {
    Vector row(kComponents);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) row[flat(i, j, k)] += entry(ginv, i, j);
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Tensor3 lee_family_tensor(int alpha, const HNStructure& h, const Vector& theta) {
  const Matrix& J = h.j(alpha);
  auto th = [&](const Vector& v) {
    Scalar s;
    for (int m = 0; m < kDim; ++m) s += theta[m] * v[m];
    return s;
  };
  const bool hermitian = h.epsilon(alpha) == 1;
  const Scalar factor = hermitian ? Scalar(1, 2) : Scalar(1, 4);
  const Scalar sign = hermitian ? Scalar(-1) : Scalar(1);
  Tensor3 out;
  for (int x = 1; x <= kDim; ++x)
    for (int y = 1; y <= kDim; ++y)
      for (int z = 1; z <= kDim; ++z) {
        const Vector ex = basis_vector(x), ey = basis_vector(y), ez = basis_vector(z);
        const Vector jy = J * ey, jz = J * ez;
        // Hermitian: g(x,y)th(z) - g(x,Jy)th(Jz) - g(x,z)th(y) + g(x,Jz)th(Jy)
        // Norden:    g(x,y)th(z) + g(x,Jy)th(Jz) + g(x,z)th(y) + g(x,Jz)th(Jy)
        const Scalar v = h.metric(ex, ey) * th(ez) + sign * h.metric(ex, jy) * th(jz) +
                         sign * h.metric(ex, ez) * th(ey) + h.metric(ex, jz) * th(jy);
        out(x, y, z) = factor * v;
      }
  return out;
}

AdmissibleSpace build_admissible_space(int alpha, const HNStructure& h) {
  if (alpha < 1 || alpha > 3) throw Error(ErrorCode::IndexOutOfRange, "alpha must be 1, 2 or 3");
  AdmissibleSpace space;
  space.alpha = alpha;
  space.constraints = symmetry_constraints(alpha, h);
  space.basis = kernel_tensors(space.constraints);

  std::vector<Tensor3> lee_family;
  for (int t = 1; t <= kDim; ++t) lee_family.push_back(lee_family_tensor(alpha, h, basis_vector(t)));

  const Matrix plain = cyclic_sum_operator(alpha, h, false);
  if (alpha == 1) {
    space.classes.push_back({"W2", kernel_tensors(space.constraints.stacked(plain))});
    space.classes.push_back({"W4", lee_family});
  } else {
    space.classes.push_back({"W1", lee_family});
    space.classes.push_back({"W2", kernel_tensors(space.constraints.stacked(cyclic_sum_operator(alpha, h, true))
                                                       .stacked(lee_operator(h)))});
    space.classes.push_back({"W3", kernel_tensors(space.constraints.stacked(plain))});
  }

  for (const auto& cls : space.classes)
    for (const auto& t : cls.basis)
      if (!is_zero(space.constraints * t.flat())) {
        throw Error(ErrorCode::DecompositionFailure, cls.name + " basis tensor violates the F symmetries");
      }

  // Drop any vector of a later class that lies in the span of the earlier
  // ones, so the final sum is direct.
  Matrix accepted;
  std::size_t accepted_rank = 0;
  for (auto& cls : space.classes) {
    std::vector<Tensor3> kept;
    for (const auto& t : cls.basis) {
      const Matrix trial = accepted.concatenated(columns_of({t}));
      const std::size_t r = rank(trial);
      if (r > accepted_rank) {
        accepted = trial;
        accepted_rank = r;
        kept.push_back(t);
      }
    }
    if (kept.size() != cls.basis.size()) {
      space.notes.push_back(cls.name + ": reduced from " + std::to_string(cls.basis.size()) + " to " +
                            std::to_string(kept.size()) + " vectors to complete a direct sum");
    }
    cls.basis = std::move(kept);
  }
  if (accepted_rank != space.basis.size()) {
    throw Error(ErrorCode::DecompositionFailure,
                "class subspaces span " + std::to_string(accepted_rank) + " of " +
                    std::to_string(space.basis.size()) + " admissible dimensions for J" + std::to_string(alpha));
  }
  space.combined = accepted;
  return space;
}

const AdmissibleSpace& admissible_space(int alpha) {
  if (alpha < 1 || alpha > 3) throw Error(ErrorCode::IndexOutOfRange, "alpha must be 1, 2 or 3");
  static std::array<AdmissibleSpace, 3> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    const HNStructure h = standard_h();
    for (int a = 1; a <= 3; ++a) cache[static_cast<std::size_t>(a - 1)] = build_admissible_space(a, h);
  });
  return cache[static_cast<std::size_t>(alpha - 1)];
}

std::map<std::string, Tensor3> decompose(const Tensor3& F, const AdmissibleSpace& space) {
  if (!is_zero(space.constraints * F.flat())) {
    throw Error(ErrorCode::NotAdmissible, "tensor lacks the symmetries of F" + std::to_string(space.alpha));
  }
  const auto coeffs = try_solve(space.combined, F.flat());
  if (!coeffs) throw Error(ErrorCode::DecompositionFailure, "admissible tensor outside the class sum");

  std::map<std::string, Tensor3> out;
  std::size_t offset = 0;
  for (const auto& cls : space.classes) {
    Tensor3 part;
    for (const auto& t : cls.basis) {
      const Scalar& c = (*coeffs)[offset++];
      if (!c.is_zero()) part += c * t;
    }
    out[cls.name] = std::move(part);
  }
  return out;
}

std::string ClassLabel::label() const {
  if (components.empty()) return "W0";
  std::string s = "W";
  for (int c : components) s += std::to_string(c);
  return s;
}

ClassLabel ClassLabel::parse(int alpha, const std::string& text) {
  if (text.size() < 2 || text[0] != 'W') throw Error(ErrorCode::SyntaxError, "bad class label '" + text + "'");
  ClassLabel out{alpha, {}};
  if (text == "W0") return out;
  const auto allowed = class_numbers(alpha);
  for (char ch : text.substr(1)) {
    const int n = ch - '0';
    if (std::find(allowed.begin(), allowed.end(), n) == allowed.end() ||
        std::find(out.components.begin(), out.components.end(), n) != out.components.end()) {
      throw Error(ErrorCode::SyntaxError, "bad class label '" + text + "' for J" + std::to_string(alpha));
    }
    out.components.push_back(n);
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

bool ClassLabel::contained_in(const ClassLabel& other) const {
  for (int c : components)
    if (std::find(other.components.begin(), other.components.end(), c) == other.components.end()) return false;
  return true;
}

ClassLabel label_of(const Tensor3& F, int alpha, const HNStructure& h) {
  static const HNStructure reference = standard_h();
  const bool standard = h.g == reference.g && h.J == reference.J;
  AdmissibleSpace local;
  const AdmissibleSpace* space = nullptr;
  if (standard) {
    space = &admissible_space(alpha);
  } else {
    local = build_admissible_space(alpha, h);
    space = &local;
  }
  ClassLabel out{alpha, {}};
  for (const auto& [name, part] : decompose(F, *space))
    if (!part.is_zero()) out.components.push_back(name[1] - '0');
  std::sort(out.components.begin(), out.components.end());
  return out;
}

std::array<ClassLabel, 3> classify(const FundamentalTensors& ft, const HNStructure& h) {
  return {label_of(ft.f(1), 1, h), label_of(ft.f(2), 2, h), label_of(ft.f(3), 3, h)};
}

std::array<ClassLabel, 3> classify(const LieAlgebra& algebra, const HNStructure& h) {
  return classify(fundamental_tensors(koszul_connection(algebra, h), h), h);
}

}  // namespace hnlie
