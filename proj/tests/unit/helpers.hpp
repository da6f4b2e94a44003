#pragma once

#include <functional>
#include <string>

#include "ttone/errors.hpp"
#include "ttone/labeling.hpp"

// Error code thrown by fn, or "" when it returns normally.
inline std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ttone::Error& e) {
    return e.code();
  }
  return "";
}

inline ttone::ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ttone::Error& e) {
    return e.kind();
  }
  return ttone::ErrorKind::internal;
}

inline ttone::Labeling labeling_of(int t, int k, std::initializer_list<ttone::Label> labels) {
  ttone::Labeling f(static_cast<int>(labels.size()), t, k);
  int v = 0;
  for (auto l : labels) f.set(v++, l);
  return f;
}
