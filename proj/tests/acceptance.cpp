#include <chrono>
#include <iostream>

#include "hochlat/checks.hpp"

int main() {
  auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (const auto& r : hochlat::run_checks(10)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
    all = all && r.pass;
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "all criteria pass" : "some criteria fail") << " (" << secs << " s)\n";
  return all ? 0 : 1;
}
