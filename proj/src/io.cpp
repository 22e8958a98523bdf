#include "popuc/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace popuc::io {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw InputError("empty complex literal");
  // strip a trailing 'i' term; the literal is re, imi, or re+imi
  bool has_imag = s.back() == 'i' || s.back() == 'I';
  auto parse_real = [](const std::string& t) -> double {
    if (t.empty()) throw InputError("malformed complex literal");
    size_t pos = 0;
    double v;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw InputError("malformed complex literal '" + t + "'");
    }
    if (pos != t.size()) throw InputError("malformed complex literal '" + t + "'");
    return v;
  };
  if (!has_imag) return Complex(parse_real(s), 0.0);

  std::string body = s.substr(0, s.size() - 1);
  // find the sign splitting real and imaginary parts (not a leading sign,
  // not an exponent sign)
  size_t split_at = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char ch = body[k];
    if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  std::string re_part, im_part;
  if (split_at == std::string::npos) {
    re_part = "0";
    im_part = body;
  } else {
    re_part = body.substr(0, split_at);
    im_part = body.substr(split_at);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  else if (im_part == "-") im_part = "-1";
  return Complex(parse_real(re_part), parse_real(im_part));
}

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

Range parse_range(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) throw InputError("range must be start:end:step, got '" + text + "'");
  Range r;
  try {
    r.start = std::stod(parts[0]);
    r.end = std::stod(parts[1]);
    r.step = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw InputError("malformed range '" + text + "'");
  }
  if (!(r.step > 0.0)) throw InputError("range step must be positive");
  if (r.end < r.start) throw InputError("range is empty");
  return r;
}

std::vector<double> Range::grid() const {
  std::vector<double> g;
  long count = std::lround(std::floor((end - start) / step + 1e-9));
  for (long k = 0; k <= count; ++k) g.push_back(start + step * static_cast<double>(k));
  return g;
}

schur::SchurParameters parse_parameters_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  schur::SchurParameters p;
  bool have_alphas = false, have_tau = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw InputError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    try {
      if (key == "alphas") {
        p.alphas.clear();
        if (!val.empty())
          for (auto& tok : split(val, ','))
            if (!trim(tok).empty()) p.alphas.push_back(parse_complex(tok));
        have_alphas = true;
      } else if (key == "tau") {
        p.tau = parse_complex(val);
        have_tau = true;
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_alphas || !have_tau) throw InputError("parameter file needs both 'alphas' and 'tau'");
  try {
    p.validate();
  } catch (const InputError& e) {
    throw InputError(std::string("parameter file: ") + e.what());
  }
  return p;
}

schur::SchurParameters read_parameters_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open parameter file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_parameters_text(ss.str());
}

void write_parameters_file(const std::string& path, const schur::SchurParameters& params) {
  std::ostringstream out;
  out << "alphas = ";
  for (int j = 0; j < params.n(); ++j) {
    if (j) out << ", ";
    out << format_complex(params.alphas[j]);
  }
  out << "\ntau = " << format_complex(params.tau) << "\n";
  write_file_atomic(path, out.str());
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + tmp + "'");
    f << content;
    if (!f.good()) throw InputError("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace popuc::io
