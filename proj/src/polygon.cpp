#include "spectre/polygon.hpp"

#include <algorithm>

namespace spectre {

Polygon::Polygon(std::vector<Face> faces) : faces_(std::move(faces))
{
    if (faces_.empty())
        throw ValidationError("polygon needs at least one face");
    for (const Face& f : faces_) {
        if (f.p < 1 || f.q < 1 || f.k < 1)
            throw ValidationError("face entries must be positive");
        if (gcd(f.p, f.q) != 1)
            throw ValidationError("face (" + std::to_string(f.p) + "," + std::to_string(f.q) + ") is not primitive");
    }
    for (int i = 1; i < r(); ++i)
        if (delta(i) <= 0)
            throw ValidationError("faces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                  " are not strictly convex");
}

Point Polygon::X(int i) const
{
    if (i == -1 || i == r() + 1)
        return {1, 1};
    if (i < -1 || i > r() + 1)
        throw std::out_of_range("polygon vertex index");
    Point x;
    for (int j = 1; j <= i; ++j)
        x.m = add(x.m, mul(face(j).p, face(j).k));
    for (int j = i + 1; j <= r(); ++j)
        x.n = add(x.n, mul(face(j).q, face(j).k));
    return x;
}

std::vector<Point> Polygon::vertices() const
{
    std::vector<Point> out;
    for (int i = 0; i <= r(); ++i)
        out.push_back(X(i));
    return out;
}

Int Polygon::A(int i, int j) const
{
    Point a = X(i), b = X(j);
    return checked(static_cast<__int128>(a.m) * b.n - static_cast<__int128>(b.m) * a.n);
}

Int Polygon::delta(int i) const { return mul(face(i + 1).p, face(i).q) - mul(face(i).p, face(i + 1).q); }

Int Polygon::d(int i) const
{
    Point x = X(i);
    return gcd(x.m, x.n);
}

Int Polygon::N(int i) const
{
    Point x = X(i);
    return add(mul(face(i).q, x.m), mul(face(i).p, x.n));
}

Rat Polygon::phi(int i, Int x, Int y) const { return Rat(add(mul(face(i).q, x), mul(face(i).p, y)), N(i)); }

Polygon Polygon::mirror() const
{
    std::vector<Face> f;
    for (auto it = faces_.rbegin(); it != faces_.rend(); ++it)
        f.push_back({it->q, it->p, it->k});
    return Polygon(std::move(f));
}

Polygon from_vertices(const std::vector<Point>& pts)
{
    if (pts.size() < 2)
        throw ValidationError("need at least two vertices");
    if (pts.front().m != 0 || pts.back().n != 0)
        throw ValidationError("polygon must start on the y-axis and end on the x-axis");
    std::vector<Face> faces;
    for (size_t i = 1; i < pts.size(); ++i) {
        Int dm = pts[i].m - pts[i - 1].m, dn = pts[i - 1].n - pts[i].n;
        if (dm <= 0 || dn <= 0)
            throw ValidationError("vertices must have m increasing and n decreasing");
        Int k = gcd(dm, dn);
        faces.push_back({dm / k, dn / k, k});
    }
    return Polygon(std::move(faces));
}

Diagram to_diagram(const Polygon& P)
{
    Diagram d;
    std::vector<int> nodes;
    for (int i = 1; i <= P.r(); ++i)
        nodes.push_back(d.add_vertex("n" + std::to_string(i)));
    int lp = d.add_vertex("lp");
    d.add_edge(nodes.front(), lp, P.face(1).p, 1);
    for (int i = 1; i < P.r(); ++i)
        d.add_edge(nodes[static_cast<size_t>(i - 1)], nodes[static_cast<size_t>(i)], P.face(i).q, P.face(i + 1).p);
    int lq = d.add_vertex("lq");
    d.add_edge(nodes.back(), lq, P.face(P.r()).q, 1);
    for (int i = 1; i <= P.r(); ++i)
        for (Int j = 0; j < P.face(i).k; ++j)
            d.add_arrow(nodes[static_cast<size_t>(i - 1)], 1, 1);
    d.set_root(nodes.front());
    return d;
}

Int milnor(const Polygon& P)
{
    Int mu = 1;
    for (int k = -1; k <= P.r(); ++k)
        mu = add(mu, P.A(k + 1, k));
    return mu;
}

Int kouchnirenko(const Polygon& P)
{
    Int twice_area = 0;
    for (int i = 1; i <= P.r(); ++i)
        twice_area = add(twice_area, P.A(i, i - 1));
    return twice_area - P.X(P.r()).m - P.X(0).n + 1;
}

namespace {

// Lattice points strictly inside the parallelogram spanned by a and b
// (0 < lambda_a, lambda_b < 1); calls f(x, y) for each.
template <class F>
void open_parallelogram(Point a, Point b, F&& f)
{
    __int128 det = static_cast<__int128>(a.m) * b.n - static_cast<__int128>(a.n) * b.m;
    if (det == 0)
        return;
    Int xmax = std::max<Int>({0, a.m, b.m, a.m + b.m}), ymax = std::max<Int>({0, a.n, b.n, a.n + b.n});
    Int xmin = std::min<Int>({0, a.m, b.m, a.m + b.m}), ymin = std::min<Int>({0, a.n, b.n, a.n + b.n});
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y) {
            // lambda_a = det(P, b)/det, lambda_b = det(a, P)/det
            __int128 la = static_cast<__int128>(x) * b.n - static_cast<__int128>(y) * b.m;
            __int128 lb = static_cast<__int128>(a.m) * y - static_cast<__int128>(a.n) * x;
            if (det < 0) {
                la = -la;
                lb = -lb;
            }
            __int128 D = det < 0 ? -det : det;
            if (la > 0 && la < D && lb > 0 && lb < D)
                f(x, y);
        }
}

} // namespace

SpecBag lattice_spectrum(const Polygon& P)
{
    SpecBag out;
    for (int i = 1; i <= P.r(); ++i) {
        open_parallelogram(P.X(i - 1), P.X(i), [&](Int x, Int y) { out.add(Rat(1) - P.phi(i, x, y)); });
        if (i < P.r()) {
            // open segment ]0, 2 X_i[
            Point xi = P.X(i);
            Int g = gcd(xi.m, xi.n);
            for (Int t = 1; t < 2 * g; ++t)
                out.add(Rat(1) - P.phi(i, t * (xi.m / g), t * (xi.n / g)));
        }
    }
    return out;
}

Int count_open_segment(const Rat& x, const Rat& y)
{
    if (!(x < y))
        throw std::invalid_argument("count_open_segment needs x < y");
    // integers n with x < n < y
    mpz_class lo = floor(x) + 1;
    mpz_class hi = floor(y);
    if (y.is_integer())
        hi -= 1;
    mpz_class c = hi - lo + 1;
    return c < 0 ? 0 : c.get_si();
}

Rat open_segment_closed_form(const Rat& x, const Rat& y) { return y - x + frac(x) + frac(-y) - Rat(1); }

namespace {

Int face_level(Point X, Int p, Int q) { return add(mul(q, X.m), mul(p, X.n)); }

void check_cone(Point X0, Point X1, Int p, Int q)
{
    if (static_cast<__int128>(X0.m) * X1.n == static_cast<__int128>(X0.n) * X1.m)
        throw std::invalid_argument("cone generators are linearly dependent");
    if (face_level(X0, p, q) != face_level(X1, p, q))
        throw std::invalid_argument("cone generators do not lie on a common face");
}

} // namespace

Int count_cone_fiber(Point X0, Point X1, Int p, Int q, Int s)
{
    check_cone(X0, X1, p, q);
    Int n = 0;
    // points with q x + p y = s, x, y >= 0
    for (Int x = 0; mul(q, x) <= s; ++x) {
        Int rest = s - q * x;
        if (rest % p != 0)
            continue;
        Int y = rest / p;
        __int128 l0 = static_cast<__int128>(x) * X1.n - static_cast<__int128>(y) * X1.m;
        __int128 l1 = static_cast<__int128>(X0.m) * y - static_cast<__int128>(X0.n) * x;
        __int128 det = static_cast<__int128>(X0.m) * X1.n - static_cast<__int128>(X0.n) * X1.m;
        if (det < 0) {
            l0 = -l0;
            l1 = -l1;
        }
        if (l0 > 0 && l1 > 0)
            ++n;
    }
    return n;
}

Rat cone_fiber_closed_form(Point X0, Point X1, Int p, Int q, Int s)
{
    check_cone(X0, X1, p, q);
    if (X1.m < X0.m)
        std::swap(X0, X1);
    Int N = face_level(X0, p, q);
    Int k = (X1.m - X0.m) / p;
    Int u = 0, v = 0;
    bezout(p, q, u, v);
    Rat t0 = Rat(mul(s, u * X0.m - v * X0.n), N);
    Rat t1 = Rat(mul(s, v * X1.n - u * X1.m), N);
    return Rat(-1) + Rat(mul(k, s), N) + frac(t0) + frac(t1);
}

bool cone_fiber_degenerate(Point X0, Point X1, Int p, Int q, Int s)
{
    check_cone(X0, X1, p, q);
    if (X1.m < X0.m)
        std::swap(X0, X1);
    Int N = face_level(X0, p, q);
    Int u = 0, v = 0;
    bezout(p, q, u, v);
    return mod(static_cast<__int128>(s) * (u * X0.m - v * X0.n), N) == 0 ||
           mod(static_cast<__int128>(s) * (v * X1.n - u * X1.m), N) == 0;
}

Int BrickSpec::ell() const
{
    Int t = 0;
    for (Int x : l)
        t = add(t, x);
    return t;
}

namespace {

void check_brick(const BrickSpec& b)
{
    if (b.p < 1 || b.q < 1 || gcd(b.p, b.q) != 1)
        throw ValidationError("brick: p, q must be coprime positive integers");
    if (b.m < 0 || b.n < 0)
        throw ValidationError("brick: m, n must be non-negative");
    if (b.l.empty() || std::any_of(b.l.begin(), b.l.end(), [](Int x) { return x < 1; }))
        throw ValidationError("brick: arrow multiplicities must be positive");
    if (b.m - mul(b.p, b.ell()) <= 0)
        throw ValidationError("brick: requires m - p*l > 0");
}

} // namespace

Diagram brick_diagram(const BrickSpec& b)
{
    check_brick(b);
    Diagram d;
    int v = d.add_vertex("v");
    d.add_arrow(v, b.p, b.m - mul(b.p, b.ell()));
    if (b.n > 0) {
        d.add_arrow(v, b.q, b.n);
    } else {
        int leaf = d.add_vertex("lq");
        d.add_edge(v, leaf, b.q, 1);
    }
    for (Int x : b.l)
        d.add_arrow(v, 1, x);
    d.set_root(v);
    return d;
}

Rat virtual_value_of_brick(const BrickSpec& b)
{
    // only the linear form matters here, the arrows may be left out
    if (b.p < 1 || b.q < 1 || gcd(b.p, b.q) != 1 || b.m < 0 || b.n < 0 || (b.m == 0 && b.n == 0))
        throw ValidationError("brick: needs coprime p, q and a non-zero corner (m, n)");
    return Rat(1) - Rat(b.p + b.q, add(mul(b.q, b.m), mul(b.p, b.n)));
}

SpecBag brick_parallelogram_values(const BrickSpec& b)
{
    check_brick(b);
    Int N = add(mul(b.q, b.m), mul(b.p, b.n));
    Int l = b.ell();
    SpecBag out;
    open_parallelogram({b.m, b.n}, {b.m - b.p * l, b.n + b.q * l},
                       [&](Int x, Int y) { out.add(Rat(1) - Rat(b.q * x + b.p * y, N)); });
    return out;
}

} // namespace spectre
