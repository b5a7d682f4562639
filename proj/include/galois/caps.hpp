#pragma once

namespace galois {

// Guards on exponential-size sweeps. Set once at startup (the CLI honors a
// GALOIS_CAP override); library code only reads them.
struct Caps {
  int table = 16;   // 2^n closure tables
  int family = 20;  // family-only subset sweeps (lower sets, direct variants)
  int direct = 16;  // 2^n' definitional Galois check
};

Caps& caps();

}  // namespace galois
