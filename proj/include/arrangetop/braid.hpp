#pragma once

#include <vector>

#include "arrangetop/arrangement.hpp"

namespace arrangetop {

/// One affine line y = slope*x + intercept of a deconed arrangement,
/// remembering which projective line it came from.
struct AffineLine {
    CycNumber slope;
    CycNumber intercept;
    int line; // original 1-based index
};

struct AffineArrangement {
    std::vector<AffineLine> lines;            // d - 1 lines, original order
    int infinity_line = 0;                    // the removed 1-based index
    size_t d = 0;                             // original line count
    std::vector<std::vector<int>> parallel_classes; // slope classes with >= 2 members
};

/// Decone by a deterministic projective change of coordinates that sends
/// the chosen line to infinity, followed by a rational shear search until
/// no line is vertical and no two intersection points share an x-coordinate.
AffineArrangement decone(const Arrangement& a, int infinity_index);

/// A word in the Artin generators; letters are +-k for sigma_k.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    std::vector<int> permutation() const; // 0-based positions
    bool is_pure() const;
    long exponent_sum() const;
};

struct AffinePoint {
    CycNumber x, y;
    std::vector<int> lines; // original 1-based indices through the point
};

struct MonodromyEvent {
    AffinePoint point; // the critical value is point.x
    BraidWord braid;
};

struct MonodromyData {
    int strands = 0;
    std::vector<int> strand_lines; // basepoint position -> original line index
    CycNumber basepoint;
    std::vector<MonodromyEvent> events; // critical values in (Re, Im) order
};

struct BraidOptions {
    Rational extra_left = 0;   // push the basepoint further left
    Rational extra_below = 0;  // push the corridor further down
    int first_direction = 0;   // start index into the projection sequence
};

/// Exact braid monodromy: all strand crossings along the polygonal lassos
/// are roots of affine equations over the field and are resolved exactly.
MonodromyData braid_monodromy(const AffineArrangement& aa, const BraidOptions& opts = {});

/// Affine intersection points of the deconed arrangement, grouped exactly
/// and sorted by (Re, Im) of the x-coordinate.
std::vector<AffinePoint> affine_points(const AffineArrangement& aa);

} // namespace arrangetop
