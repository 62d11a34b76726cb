#pragma once

#include "fone/matrix.hpp"

namespace fone {

// Pushout of C <<- A >-> B along an admissible span. Output basis order:
// B's non-identified slots first (in B order), then C's slots (in C order).
struct PushoutResult {
  Space space;
  SubmonomialMatrix from_b;  // surjection B ->> D
  SubmonomialMatrix from_c;  // injection C >-> D
};
PushoutResult pushout(const SubmonomialMatrix& i, const SubmonomialMatrix& p);

// Pullback of B ->> D <-< C. Output basis order: lexicographic in
// (b-index, c-index), with the kernel slots (no c-partner) first per b.
struct PullbackResult {
  Space space;
  SubmonomialMatrix to_b;  // injection A >-> B
  SubmonomialMatrix to_c;  // surjection A ->> C
};
PullbackResult pullback(const SubmonomialMatrix& p2,
                        const SubmonomialMatrix& i2);

}  // namespace fone
