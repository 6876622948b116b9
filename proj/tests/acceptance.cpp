#include <cstdlib>
#include <iostream>

#include "cml/repro.hpp"

int main(int argc, char** argv) {
  int first = 1, last = cml::kCriteria;
  if (argc > 1) first = last = std::atoi(argv[1]);
  int failed = 0;
  for (int id = first; id <= last; ++id) {
    const auto r = cml::run_criterion(id);
    const bool pass = r.status != "FAIL";
    failed += !pass;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL");
    if (r.status == "DISCREPANCY") std::cout << " (recorded discrepancy)";
    std::cout << "  " << r.title << " | " << r.detail << " [" << r.seconds << " s]\n";
  }
  return failed == 0 ? 0 : 1;
}
