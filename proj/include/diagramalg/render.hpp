#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "diagramalg/diagrams.hpp"

namespace diagramalg {

namespace detail {

struct Layout {
  double left = 40, spacing = 60, top = 40, bottom = 130;
  double x(int i) const { return left + spacing * (i - 1); }
};

// Vertices of each block: tops and bottoms by index.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> block_rows(const PartitionDiagram& d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rows(static_cast<std::size_t>(d.block_count()));
  for (int i = 1; i <= d.n(); ++i) rows[static_cast<std::size_t>(d.block_of_top(i))].first.push_back(i);
  for (int i = 1; i <= d.n(); ++i) rows[static_cast<std::size_t>(d.block_of_bottom(i))].second.push_back(i);
  return rows;
}

// Arcs along each row plus one vertical strand for propagating blocks.
inline std::string block_path(const std::vector<int>& tops, const std::vector<int>& bottoms, const Layout& l) {
  std::ostringstream s;
  auto arc = [&](const std::vector<int>& row, double y, double bulge) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      const double x0 = l.x(row[k - 1]), x1 = l.x(row[k]);
      s << "M" << x0 << ',' << y << " Q" << (x0 + x1) / 2 << ',' << y + bulge << ' ' << x1 << ',' << y << ' ';
    }
  };
  const double depth = (l.bottom - l.top) / 3;
  arc(tops, l.top, depth);
  arc(bottoms, l.bottom, -depth);
  if (!tops.empty() && !bottoms.empty())
    s << "M" << l.x(tops.front()) << ',' << l.top << " L" << l.x(bottoms.front()) << ',' << l.bottom << ' ';
  return s.str();
}

inline std::string svg_diagram(const PartitionDiagram& bones, const PartitionDiagram* islands) {
  const Layout l;
  const int n = bones.n();
  const double width = l.left * 2 + l.spacing * (n - 1);
  const double height = l.bottom + l.top;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (islands)
    for (const auto& [t, b] : block_rows(*islands)) {
      std::string d = block_path(t, b, l);
      const double x = l.x(t.empty() ? b.front() : t.front());
      const double y = t.empty() ? l.bottom : l.top;
      if (d.empty()) d = "M" + std::to_string(x) + "," + std::to_string(y) + " l0.01,0";
      s << "<path d=\"" << d << "\" fill=\"none\" stroke=\"#9ecae1\" stroke-opacity=\"0.6\" stroke-width=\"22\""
        << " stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    }
  for (const auto& [t, b] : block_rows(bones)) {
    const std::string d = block_path(t, b, l);
    if (!d.empty()) s << "<path d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int i = 1; i <= n; ++i) {
    s << "<circle cx=\"" << l.x(i) << "\" cy=\"" << l.top << "\" r=\"4\" fill=\"black\"/>";
    s << "<circle cx=\"" << l.x(i) << "\" cy=\"" << l.bottom << "\" r=\"4\" fill=\"black\"/>\n";
    s << "<text x=\"" << l.x(i) << "\" y=\"" << l.top - 12 << "\" font-family=\"sans-serif\" font-size=\"12\""
      << " text-anchor=\"middle\">" << i << "</text>";
    s << "<text x=\"" << l.x(i) << "\" y=\"" << l.bottom + 22 << "\" font-family=\"sans-serif\" font-size=\"12\""
      << " text-anchor=\"middle\">" << i << "'</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

inline char block_letter(int b) { return static_cast<char>(b < 26 ? 'a' + b : 'A' + (b - 26) % 26); }

}  // namespace detail

/// Self-contained SVG; top vertices above, primed ones below.
inline std::string render_svg(const PartitionDiagram& d) { return detail::svg_diagram(d, nullptr); }

/// Bones drawn as strokes over shaded islands.
inline std::string render_svg(const RamifiedDiagram& r) { return detail::svg_diagram(r.fine(), &r.coarse()); }

/// Two rows of block letters, e.g. for {1,2'}{2,1'}:
///   a b
///   b a
inline std::string render_text(const PartitionDiagram& d) {
  std::string top, bottom;
  for (int i = 1; i <= d.n(); ++i) {
    if (i > 1) top += ' ', bottom += ' ';
    top += detail::block_letter(d.block_of_top(i));
    bottom += detail::block_letter(d.block_of_bottom(i));
  }
  return top + "\n" + bottom + "\n";
}

inline std::string render_text(const RamifiedDiagram& r) {
  std::string out = "bones\n" + render_text(r.fine());
  out += "islands\n" + render_text(r.coarse());
  return out;
}

}  // namespace diagramalg
