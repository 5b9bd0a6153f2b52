#include "vlasov/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace vlasov::simd {

#if VLASOV_HAVE_AVX2
const Kernels& avx2_impl();
#endif

const Kernels* avx2() {
#if VLASOV_HAVE_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_impl();
#endif
  return nullptr;
}

namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* resolve(const char* name) {
  if (std::strcmp(name, "scalar") == 0) return &scalar();
  if (std::strcmp(name, "avx2") == 0) {
    const Kernels* k = avx2();
    if (!k) throw std::runtime_error("simd backend 'avx2' is not available on this build/CPU");
    return k;
  }
  if (std::strcmp(name, "auto") == 0) {
    if (const Kernels* k = avx2()) return k;
    return &scalar();
  }
  throw std::runtime_error(std::string("unknown simd backend '") + name + "' (use auto, scalar or avx2)");
}

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    const char* env = std::getenv("VLASOV_SIMD");
    k = resolve(env && *env ? env : "auto");
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void set_active(const char* name) {
  g_active.store(resolve(name), std::memory_order_release);
}

}  // namespace vlasov::simd
