#pragma once

#include <cstdio>
#include <string>

namespace rydnet {

// Shortest round-trippable-ish decimal with >= 12 significant digits.
// Used for every CSV float so reruns are byte-identical.
inline std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace rydnet
