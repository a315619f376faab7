#include "ggfnsp/alloc_probe.hpp"

#include <malloc.h>

#include <cstdlib>
#include <new>

namespace {

thread_local std::uint64_t t_live = 0;
thread_local std::uint64_t t_baseline = 0;
thread_local std::uint64_t t_peak = 0;

inline void track(void* p) {
  if (p == nullptr) {
    return;
  }
  t_live += malloc_usable_size(p);
  if (t_live > t_peak) {
    t_peak = t_live;
  }
}

inline void untrack(void* p) {
  if (p == nullptr) {
    return;
  }
  const std::uint64_t size = malloc_usable_size(p);
  t_live = size > t_live ? 0 : t_live - size;
}

void* checked_malloc(std::size_t size) {
  void* p = std::malloc(size);
  if (p == nullptr) {
    throw std::bad_alloc();
  }
  track(p);
  return p;
}

void* checked_aligned(std::size_t size, std::size_t align) {
  const std::size_t rounded = (size + align - 1) / align * align;
  void* p = std::aligned_alloc(align, rounded);
  if (p == nullptr) {
    throw std::bad_alloc();
  }
  track(p);
  return p;
}

}  // namespace

namespace ggfnsp::memprobe {

void reset() {
  t_baseline = t_live;
  t_peak = t_live;
}

std::uint64_t peak_delta() {
  return t_peak > t_baseline ? t_peak - t_baseline : 0;
}

}  // namespace ggfnsp::memprobe

void* operator new(std::size_t size) { return checked_malloc(size); }
void* operator new[](std::size_t size) { return checked_malloc(size); }

void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
  void* p = std::malloc(size);
  track(p);
  return p;
}
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
  void* p = std::malloc(size);
  track(p);
  return p;
}

void* operator new(std::size_t size, std::align_val_t align) {
  return checked_aligned(size, static_cast<std::size_t>(align));
}
void* operator new[](std::size_t size, std::align_val_t align) {
  return checked_aligned(size, static_cast<std::size_t>(align));
}
void* operator new(std::size_t size, std::align_val_t align,
                   const std::nothrow_t&) noexcept {
  const auto a = static_cast<std::size_t>(align);
  void* p = std::aligned_alloc(a, (size + a - 1) / a * a);
  track(p);
  return p;
}
void* operator new[](std::size_t size, std::align_val_t align,
                     const std::nothrow_t&) noexcept {
  const auto a = static_cast<std::size_t>(align);
  void* p = std::aligned_alloc(a, (size + a - 1) / a * a);
  track(p);
  return p;
}

void operator delete(void* p) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete[](void* p) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete(void* p, std::size_t) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete[](void* p, std::size_t) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete(void* p, const std::nothrow_t&) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete[](void* p, const std::nothrow_t&) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete(void* p, std::align_val_t) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete[](void* p, std::align_val_t) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete(void* p, std::size_t, std::align_val_t) noexcept {
  untrack(p);
  std::free(p);
}
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept {
  untrack(p);
  std::free(p);
}
