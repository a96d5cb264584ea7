#pragma once

#include <cstddef>
#include <cstdint>

#if defined(__linux__)
#include <pthread.h>
#endif

namespace ezhil::detail {

// True while the calling thread still has `reserve` bytes of native stack.
inline bool stack_headroom(std::size_t reserve = 256 * 1024) {
#if defined(__linux__)
  thread_local const std::uintptr_t low_water = [] {
    pthread_attr_t attr;
    void* addr = nullptr;
    std::size_t size = 0;
    if (pthread_getattr_np(pthread_self(), &attr) != 0) return std::uintptr_t{0};
    pthread_attr_getstack(&attr, &addr, &size);
    pthread_attr_destroy(&attr);
    return reinterpret_cast<std::uintptr_t>(addr);
  }();
  if (low_water == 0) return true;
  char probe = 0;
  return reinterpret_cast<std::uintptr_t>(&probe) > low_water + reserve;
#else
  (void)reserve;
  return true;
#endif
}

}  // namespace ezhil::detail
