#pragma once

#include <vector>

#include "spectre/bags.hpp"
#include "spectre/diagram.hpp"

namespace spectre {

struct Face {
    Int p = 1, q = 1, k = 1;
    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

struct Point {
    Int m = 0, n = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Commode Newton polygon given by its faces, ordered so that q/p decreases.
class Polygon {
public:
    Polygon() = default;
    explicit Polygon(std::vector<Face> faces); // validates

    const std::vector<Face>& faces() const { return faces_; }
    int r() const { return static_cast<int>(faces_.size()); }
    const Face& face(int i) const { return faces_.at(static_cast<size_t>(i - 1)); } // 1-based

    // X_{-1} .. X_{r+1}; the two ends are the sentinel (1,1).
    Point X(int i) const;
    std::vector<Point> vertices() const; // X_0 .. X_r
    Int A(int i, int j) const;           // m_i n_j - m_j n_i
    Int delta(int i) const;              // p_{i+1} q_i - p_i q_{i+1}, 1 <= i < r
    Int d(int i) const;                  // gcd(m_i, n_i)
    // q_i m_i + p_i n_i: the multiplicity of node i, denominator of phi_i
    Int N(int i) const;
    Rat phi(int i, Int x, Int y) const;

    Polygon mirror() const; // exchange the two coordinates

    friend bool operator==(const Polygon&, const Polygon&) = default;
    friend auto operator<=>(const Polygon& a, const Polygon& b) { return a.faces_ <=> b.faces_; }

private:
    std::vector<Face> faces_;
};

Polygon from_vertices(const std::vector<Point>& points);

// Chain of r nodes; node i gets k_i arrows of weight 1 and multiplicity 1.
// Vertex names are n1..nr, lp, lq.
Diagram to_diagram(const Polygon& P);

Int milnor(const Polygon& P);
Int kouchnirenko(const Polygon& P); // 2 Area - m_r - n_0 + 1
SpecBag lattice_spectrum(const Polygon& P);

// Integers in the open interval (x, y).
Int count_open_segment(const Rat& x, const Rat& y);
// y - x + {x} + {-y} - 1
Rat open_segment_closed_form(const Rat& x, const Rat& y);

// Lattice points of the open cone spanned by X0 and X1 on the line
// q x + p y = s.  X0 and X1 must lie on a common line q x + p y = N.
Int count_cone_fiber(Point X0, Point X1, Int p, Int q, Int s);
// -1 + k s / N + {s (u m0 - v n0) / N} + {s (v n1 - u m1) / N}, p u + q v = 1
Rat cone_fiber_closed_form(Point X0, Point X1, Int p, Int q, Int s);
// True when a lattice point of the level line sits on a boundary ray,
// the only place where the closed form may disagree with the count.
bool cone_fiber_degenerate(Point X0, Point X1, Int p, Int q, Int s);

struct BrickSpec {
    Int m = 0, n = 0, p = 1, q = 1;
    std::vector<Int> l; // arrow multiplicities
    Int ell() const;
};

// One node of multiplicity qm + pn: a p-weighted arrow of multiplicity
// m - p*l, a q-weighted arrow of multiplicity n (a leaf when n = 0), and
// one weight-1 arrow per entry of l.
Diagram brick_diagram(const BrickSpec& b);
Rat virtual_value_of_brick(const BrickSpec& b);
// sum over the open parallelogram spanned by (m, n) and (m - p l, n + q l)
// of 1 - phi.
SpecBag brick_parallelogram_values(const BrickSpec& b);

} // namespace spectre
