#include "sgkernel/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sgkernel/errors.hpp"
#include "sgkernel/subsets.hpp"

namespace sgkernel {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Split on commas that sit outside brackets.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty()) parts.push_back(strip(cur));
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + s + "'");
  }
}

}  // namespace

std::vector<int> parse_oneline(const std::string& text) {
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("one-line notation must be bracketed: '" + text + "'");
  body = strip(body.substr(1, body.size() - 2));
  std::vector<int> images;
  if (body.find(',') != std::string::npos) {
    for (const auto& part : split_top_level(body)) images.push_back(parse_int(part, "image"));
  } else {
    for (char c : body) {
      if (c == ' ' || c == '\t') continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad one-line notation: '" + text + "'");
      images.push_back(c - '0');
    }
  }
  if (images.empty()) throw ParseError("empty one-line notation: '" + text + "'");
  return images;
}

SystemSpec parse_system_spec(std::istream& in) {
  SystemSpec spec;
  bool saw_n = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "n") {
      spec.n = parse_int(value, "n");
      saw_n = true;
    } else if (key == "colors" || key == "color") {
      for (const auto& part : split_top_level(value)) spec.colors.push_back(parse_oneline(part));
    } else if (key == "weights" || key == "weight") {
      for (const auto& part : split_top_level(value)) spec.weights.push_back(parse_rational(part));
    } else if (key == "levels" || key == "level") {
      for (const auto& part : split_top_level(value)) spec.levels.push_back(parse_int(part, "level"));
    } else if (key == "cap") {
      spec.cap = static_cast<std::size_t>(parse_int(value, "cap"));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_n) throw ParseError("input document is missing 'n'");
  if (spec.colors.empty()) throw ParseError("input document lists no colors");
  return spec;
}

SystemSpec parse_system_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_system_spec(in);
}

ColorSystem to_color_system(const SystemSpec& spec) {
  std::vector<Transformation> colors;
  for (const auto& images : spec.colors) {
    try {
      colors.push_back(from_oneline(images, spec.n));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return make_color_system(std::move(colors), spec.weights);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string print_vector(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + "]";
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("vector must be bracketed: '" + text + "'");
  body = strip(body.substr(1, body.size() - 2));
  std::vector<Rational> out;
  if (body.empty()) return out;
  for (const auto& part : split_top_level(body)) out.push_back(parse_rational(part));
  return out;
}

std::string print_subset(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

std::vector<int> parse_subset(const std::string& text) {
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ParseError("subset must be braced: '" + text + "'");
  body = strip(body.substr(1, body.size() - 2));
  std::vector<int> out;
  if (body.empty()) return out;
  for (const auto& part : split_top_level(body)) out.push_back(parse_int(part, "member"));
  if (!std::is_sorted(out.begin(), out.end()))
    throw ParseError("subset members must be sorted: '" + text + "'");
  return out;
}

std::string print_matrix(const RatMat& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += print_vector(m.row(i));
    out += '\n';
  }
  return out;
}

RatMat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    rows.push_back(parse_vector(line));
  }
  if (rows.empty()) return RatMat();
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

std::vector<std::string> level_labels(int n, int level, bool augmented) {
  SubsetTable table(n, level);
  std::vector<std::string> labels;
  for (int i = 0; i < table.size(); ++i) {
    std::string label;
    for (int v : table.members(i)) {
      if (n > 9 && !label.empty()) label += '.';
      label += std::to_string(v);
    }
    labels.push_back(label);
  }
  if (augmented) labels.push_back("X");
  return labels;
}

std::string format_labeled_matrix(const RatMat& m, const std::vector<std::string>& row_labels,
                                  const std::vector<std::string>& col_labels) {
  std::vector<std::size_t> widths(col_labels.size());
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) {
    widths[j] = col_labels[j].size();
    for (int i = 0; i < m.rows(); ++i) {
      cells[i][j] = format_rational(m(i, j));
      widths[j] = std::max(widths[j], cells[i][j].size());
    }
  }
  std::size_t label_width = 0;
  for (const auto& r : row_labels) label_width = std::max(label_width, r.size());

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (int j = 0; j < m.cols(); ++j)
    out << "  " << std::string(widths[j] - col_labels[j].size(), ' ') << col_labels[j];
  out << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    out << std::string(label_width - row_labels[i].size(), ' ') << row_labels[i];
    for (int j = 0; j < m.cols(); ++j)
      out << "  " << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
    out << '\n';
  }
  return out.str();
}

}  // namespace sgkernel
