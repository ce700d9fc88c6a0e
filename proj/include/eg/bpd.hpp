#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eg/perm.hpp"
#include "eg/poly.hpp"

namespace eg {

/// The six tiles. Connectivity: Blank none; Horizontal left-right;
/// Vertical top-bottom; RElbow bottom+right; JElbow top+left; Cross all
/// four, with the two strands passing through.
enum class Tile : std::uint8_t { Blank, Horizontal, Vertical, RElbow, JElbow, Cross };

bool tile_has_n(Tile t);
bool tile_has_s(Tile t);
bool tile_has_e(Tile t);
bool tile_has_w(Tile t);
char tile_code(Tile t);                 // B H V R J X
Tile tile_from_code(char c);

/// A finite trapezoid region: contiguous rows, each row a column interval,
/// intervals nested monotonically top-to-bottom or bottom-to-top.
class Region {
public:
    Region() = default;  // empty region
    Region(int row_lo, std::vector<std::pair<int, int>> spans);

    static Region rect(int rlo, int rhi, int clo, int chi);
    static Region square(int n) { return rect(1, n, 1, n); }
    /// Rows 1..n, row r spanning columns [a, r].
    static Region tra_window(int a, int n);
    /// Row i spanning columns [i+1, chi] for i = 1..min(rows, chi-1).
    static Region tri_window(int rows, int chi);

    bool empty() const { return spans_.empty(); }
    int row_min() const { return rlo_; }
    int row_max() const { return rlo_ + static_cast<int>(spans_.size()) - 1; }
    bool has_row(int r) const { return !empty() && r >= row_min() && r <= row_max(); }
    int row_lo(int r) const { return spans_[static_cast<size_t>(r - rlo_)].first; }
    int row_hi(int r) const { return spans_[static_cast<size_t>(r - rlo_)].second; }
    bool contains(int r, int c) const {
        return has_row(r) && c >= row_lo(r) && c <= row_hi(r);
    }
    int col_min() const;
    int col_max() const;
    bool has_col(int c) const;
    int col_top(int c) const;     // topmost row of column c
    int col_bottom(int c) const;  // bottommost row of column c

    size_t cell_count() const;
    size_t index(int r, int c) const;  // row-major
    std::vector<std::pair<int, int>> cells() const;

    bool operator==(const Region&) const = default;
    auto operator<=>(const Region&) const = default;

private:
    int rlo_ = 1;
    std::vector<std::pair<int, int>> spans_;
};

/// Partial label maps for the four sides; an absent key means no pipe.
struct BoundaryCondition {
    std::map<int, int> north, east, south, west;  // columns: N/S, rows: E/W

    std::optional<int> n(int c) const;
    std::optional<int> e(int r) const;
    std::optional<int> s(int c) const;
    std::optional<int> w(int r) const;

    bool operator==(const BoundaryCondition&) const = default;
    auto operator<=>(const BoundaryCondition&) const = default;
};

/// The boundary condition gamma^w restricted to a square window:
/// east r, south w^{-1}(c), north and west empty.
BoundaryCondition gamma_schubert_window(const Permutation& w, int lo, int hi);

class Bpd {
public:
    Bpd() = default;
    Bpd(Region region, std::vector<Tile> tiles);

    const Region& region() const { return region_; }
    Tile tile(int r, int c) const { return tiles_[region_.index(r, c)]; }
    const std::vector<Tile>& tiles() const { return tiles_; }

    bool operator==(const Bpd&) const = default;
    auto operator<=>(const Bpd&) const = default;

private:
    Region region_;
    std::vector<Tile> tiles_;
};

/// An edge of the grid. Horizontal edges sit between (r,c) and (r+1,c) and
/// are keyed by (r,c); vertical edges sit between (r,c) and (r,c+1).
struct Edge {
    bool horizontal;
    int r, c;
    auto operator<=>(const Edge&) const = default;
};

struct PipeLab {
    int label;
    Edge entry;  // a north or east boundary edge
    Edge exit;   // a south or west boundary edge
};

struct Labeling {
    std::vector<PipeLab> pipes;
    std::map<std::pair<int, int>, int> h_edge;  // (r,c) -> pipe index
    std::map<std::pair<int, int>, int> v_edge;

    std::optional<int> pipe_on_h_edge(int r, int c) const;
    std::optional<int> label_on_h_edge(int r, int c) const;
};

struct ValidationReport {
    bool ok = true;
    std::string message;  // first violation
};

/// Checks the three axioms (consistency, reducedness, anchoring of every
/// pipe from a row-or-column entry to a column-or-row exit) by tracing.
ValidationReport validate(const Bpd& d);

struct LabelOptions {
    /// When set, the north side's presence pattern and labels are not
    /// enforced; north labels are derived from each pipe's other endpoint.
    bool free_north = false;
};

/// The labeling of d with respect to bc; throws DoesNotSatisfy when the
/// entry/exit pattern, a label, distinctness, or crossing validity fails.
Labeling label(const Bpd& d, const BoundaryCondition& bc, LabelOptions opt = {});

struct LabelResult {
    bool ok = false;
    Labeling labeling;
    std::string message;
};
LabelResult try_label(const Bpd& d, const BoundaryCondition& bc, LabelOptions opt = {});

/// phi(c) = label of the pipe crossing the horizontal edge between rows r
/// and r+1 at column c.
std::map<int, int> cross_section(const Bpd& d, const Labeling& lab, int r);

/// The Rothe diagram of w restricted to [lo,hi] x [lo,hi]; the window must
/// contain the support of w.
Bpd rothe(const Permutation& w, int lo, int hi);
Bpd rothe(const Permutation& w);  // minimal window covering the support
Tile rothe_tile(const Permutation& w, int r, int c);

struct EnumerateOptions {
    bool free_north = false;
};

/// All BPDs on the region admitting a valid labeling satisfying bc, in
/// row-major tile-sequence lexicographic order (Blank < Horizontal <
/// Vertical < RElbow < JElbow < Cross).
std::vector<Bpd> enumerate(const Region& region, const BoundaryCondition& bc,
                           EnumerateOptions opt = {});

/// Product of (x_r - y_c) over blank cells.
Polynomial weight(const Bpd& d);

/// Sum of weights over BPD_n(w); equals the double Schubert polynomial.
Polynomial schubert_via_bpd(const Permutation& w, int n);

/// Fixed-width glyph rendering with row and column indices in the margins.
std::string render(const Bpd& d);

}  // namespace eg
