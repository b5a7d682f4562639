#include "galois/caps.hpp"

namespace galois {

Caps& caps() {
  static Caps instance;
  return instance;
}

}  // namespace galois
