#include <cassert>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace mmwave::simd {

namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(MMWAVE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MMWAVE_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select_kernels() noexcept {
  if (const char* forced = std::getenv("MMWAVE_SIMD")) {
    const std::string_view name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == isa_name(isa)) {
        if (const KernelTable* table = kernels_for(isa)) return *table;
      }
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (const KernelTable* table = kernels_for(isa)) return *table;
  }
  return detail::kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept { return detail::kScalarTable; }

const KernelTable* kernels_for(Isa isa) noexcept {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::Scalar: return &detail::kScalarTable;
#if defined(MMWAVE_HAVE_AVX2)
    case Isa::Avx2: return &detail::kAvx2Table;
#endif
#if defined(MMWAVE_HAVE_NEON)
    case Isa::Neon: return &detail::kNeonTable;
#endif
    default: return nullptr;
  }
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (kernels_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select_kernels();
  return table;
}

void affine(std::span<const double> x, double offset, double slope, std::span<double> out) {
  assert(x.size() == out.size());
  active_kernels().affine(x.data(), x.size(), offset, slope, out.data());
}

void residuals(std::span<const double> y, std::span<const double> x, double slope,
               std::span<double> out) {
  assert(y.size() == x.size() && x.size() == out.size());
  active_kernels().residuals(y.data(), x.data(), x.size(), slope, out.data());
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active_kernels().dot(a.data(), b.data(), a.size());
}

double sum_squares(std::span<const double> x) {
  return active_kernels().sum_squares(x.data(), x.size());
}

double sum(std::span<const double> x) { return active_kernels().sum(x.data(), x.size()); }

double sum_sqrt(std::span<const double> x) {
  return active_kernels().sum_sqrt(x.data(), x.size());
}

}  // namespace mmwave::simd
