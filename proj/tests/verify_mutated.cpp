// Runs the verification harness with a deliberately wrong genus-count
// formula. Exists so the acceptance suite can demonstrate, end to end,
// that a broken formula makes verification fail with exit code 3.

#include <iostream>

#include "nsg/counting.hpp"
#include "nsg/verify.hpp"

int main() {
  nsg::VerifyHooks hooks;
  hooks.genus_count = [](nsg::Int g) { return g - nsg::tau(g); };

  nsg::VerifyRequest request;
  request.max_genus = 8;

  return nsg::run_verification(request, hooks, std::cout);
}
