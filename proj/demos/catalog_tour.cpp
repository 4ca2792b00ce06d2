// Classifies every catalog graph and prints one line per graph.

#include <cstdio>

#include "spectral/classify.hpp"
#include "spectral/families.hpp"

int main() {
  using namespace spectral;
  std::printf("%-26s %4s %5s  %-22s %-5s %-5s %s\n", "key", "n", "m", "pattern", "in_G", "in_H", "spectrum");
  for (const auto& e : catalog()) {
    const ClassReport r = classify(e.build());
    std::printf("%-26s %4zu %5zu  %-22s %-5s %-5s %s\n", e.key.c_str(), r.n, r.m, r.pattern.to_string().c_str(), r.in_G ? "yes" : "no",
                r.in_H ? "yes" : "no", r.spectrum.c_str());
    for (const auto& [id, v] : r.verdicts)
      if (v.failed()) std::printf("    %s failed: %s\n", id.c_str(), v.detail.c_str());
  }
}
