#include <sstream>
#include <stdexcept>

#include "latgame/engine.hpp"

namespace latgame {

ImageFormat parse_image_format(const std::string& name) {
  if (name == "text" || name == "txt") return ImageFormat::kText;
  if (name == "pbm") return ImageFormat::kPbm;
  if (name == "svg") return ImageFormat::kSvg;
  throw std::invalid_argument("unknown image format '" + name + "' (text, pbm, svg)");
}

namespace {

struct View {
  const OutcomeGrid& grid;
  std::optional<std::int64_t> slice;

  std::int64_t width() const { return grid.hi()[0] + 1; }
  std::int64_t height() const { return grid.hi()[1] + 1; }
  Cell at(std::int64_t x, std::int64_t y) const {
    return grid.dim() == 3 ? grid.at(IntVec{x, y, *slice}) : grid.at(IntVec{x, y});
  }
};

char glyph(Cell c) {
  switch (c) {
    case Cell::P: return '#';
    case Cell::N: return '.';
    case Cell::Defeated: return 'x';
    case Cell::Unsolved: return '?';
  }
  return '?';
}

std::vector<std::int64_t> axis_points(std::int64_t extent, std::int64_t step) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v < extent; v += step) out.push_back(v);
  return out;
}

}  // namespace

std::string render_grid(const OutcomeGrid& grid, std::optional<std::int64_t> slice, ImageFormat format,
                        std::int64_t highlight) {
  if (grid.empty()) throw std::invalid_argument("nothing to render: empty grid");
  if (grid.dim() == 3) {
    if (!slice) throw std::invalid_argument("a 3-D grid needs a slice to render");
    if (*slice < 0 || *slice > grid.hi()[2]) throw std::out_of_range("slice outside the solved window");
  } else if (grid.dim() != 2) {
    throw std::invalid_argument("only 2-D views can be rendered");
  }
  if (highlight < 0) throw std::invalid_argument("highlight must be >= 0");
  const View v{grid, slice};
  const std::int64_t step = format == ImageFormat::kSvg || highlight == 0 ? 1 : highlight;
  const auto xs = axis_points(v.width(), step);
  const auto ys = axis_points(v.height(), step);

  std::ostringstream os;
  switch (format) {
    case ImageFormat::kText:
      for (auto y = ys.rbegin(); y != ys.rend(); ++y) {
        for (auto x : xs) os << glyph(v.at(x, *y));
        os << '\n';
      }
      break;
    case ImageFormat::kPbm: {
      os << "P1\n" << xs.size() << ' ' << ys.size() << '\n';
      std::size_t col = 0;
      for (auto y = ys.rbegin(); y != ys.rend(); ++y) {
        for (auto x : xs) {
          os << (v.at(x, *y) == Cell::P ? '1' : '0');
          if (++col == 70) {
            os << '\n';
            col = 0;
          }
        }
      }
      if (col != 0) os << '\n';
      break;
    }
    case ImageFormat::kSvg: {
      const std::int64_t s = 8;
      os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << v.width() * s << "\" height=\"" << v.height() * s
         << "\">\n";
      os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
      for (auto y : ys) {
        for (auto x : xs) {
          const Cell c = v.at(x, y);
          const char* fill = c == Cell::P ? "black" : c == Cell::Defeated ? "#bbbbbb" : nullptr;
          const bool mark = highlight > 0 && x % highlight == 0 && y % highlight == 0;
          if (!fill && !mark) continue;
          os << "<rect x=\"" << x * s << "\" y=\"" << (v.height() - 1 - y) * s << "\" width=\"" << s << "\" height=\""
             << s << "\" fill=\"" << (fill ? fill : "none") << '"';
          if (mark) os << " stroke=\"red\" stroke-width=\"1\"";
          os << "/>\n";
        }
      }
      os << "</svg>\n";
      break;
    }
  }
  return os.str();
}

}  // namespace latgame
