#include "nilcanon/io.hpp"

#include <algorithm>
#include <sstream>

namespace nilcanon {

namespace {

std::string type_letter(const LieType& t) { return std::string(1, t.letter()); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json parts_json(const Partition& mu) { return Json(mu.parts()); }

Partition parts_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "partition must be an array");
  std::vector<int> parts;
  for (const Json& p : j) {
    if (!p.is_number_integer()) throw Error(ErrorCode::ParseError, "partition parts must be integers");
    parts.push_back(p.get<int>());
  }
  return Partition(std::move(parts));
}

}  // namespace

Json matrix_entries_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["jordan_type"] = parts_json(cert.jordan_type);
  j["f_symmetric"] = cert.f_symmetric;
  j["supported"] = cert.supported;
  if (cert.lie_condition) {
    j["lie_condition"] = *cert.lie_condition;
    if (cert.lie_type) j["lie_type"] = cert.lie_type->to_string();
  }
  if (cert.f_stable) {
    j["f_stable"] = *cert.f_stable;
    j["q"] = *cert.q;
  }
  if (cert.dense_orbit) j["dense_orbit"] = *cert.dense_orbit;
  return j;
}

Certificate parse_certificate_json(const Json& j) {
  try {
    Certificate cert;
    cert.jordan_type = parts_from_json(j.at("jordan_type"));
    cert.f_symmetric = j.at("f_symmetric").get<bool>();
    cert.supported = j.at("supported").get<bool>();
    if (j.contains("lie_condition")) {
      cert.lie_condition = j.at("lie_condition").get<bool>();
      if (j.contains("lie_type")) {
        const std::string name = j.at("lie_type").get<std::string>();
        if (name.size() < 2) throw Error(ErrorCode::ParseError, "bad lie_type");
        LieType t;
        t.kind = LieType::parse_kind(name.substr(0, 1));
        t.rank = std::stoi(name.substr(1));
        cert.lie_type = t;
      }
    }
    if (j.contains("f_stable")) {
      cert.f_stable = j.at("f_stable").get<bool>();
      cert.q = j.at("q").get<std::uint64_t>();
    }
    if (j.contains("dense_orbit")) cert.dense_orbit = j.at("dense_orbit").get<bool>();
    return cert;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  }
}

Json form_json(const CanonicalForm& form) {
  Json j;
  j["n"] = form.mu.n();
  j["field"] = field_of(form.matrix) ? field_of(form.matrix)->name() : "Q";
  j["type"] = type_letter(form.type);
  j["partition"] = parts_json(form.mu);
  j["variant"] = std::string(to_string(form.variant));
  if (form.alpha) j["alpha"] = form.alpha->to_string();
  if (form.one_of_two) j["orbits"] = "one of two";
  j["entries"] = matrix_entries_json(form.matrix);
  j["certificate"] = certificate_json(form.certificate);
  return j;
}

Json layout_json(const BlockLayout& layout) {
  Json j;
  j["n"] = layout.n;
  j["partition"] = parts_json(layout.mu);
  j["weights"] = layout.diagram.weights;
  j["nu"] = layout.diagram.nu;
  j["l"] = layout.l_seq;
  j["k"] = layout.k_seq;
  Json blocks = Json::array();
  for (const Block& b : layout.blocks) {
    Json jb;
    jb["label"] = b.label();
    jb["chain"] = b.chain == Chain::I ? "I" : "J";
    jb["position"] = b.position;
    jb["rows"] = {b.row_first, b.row_last};
    jb["cols"] = {b.col_first, b.col_last};
    jb["shape"] = {b.height, b.width};
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  j["dim_g2"] = layout.dimension();
  return j;
}

ParsedMatrix parse_matrix_json(const Json& document) {
  ParsedMatrix out;
  out.document = document;
  try {
    out.field = FieldSpec::parse(document.at("field").get<std::string>());
    const Json& rows = document.at("entries");
    if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::ParseError, "entries must be a nonempty array");
    const Index n = static_cast<Index>(rows.size());
    out.matrix = Mat(n, static_cast<Index>(rows[0].size()));
    for (Index i = 0; i < n; ++i) {
      const Json& row = rows[i];
      if (!row.is_array() || static_cast<Index>(row.size()) != out.matrix.cols())
        throw Error(ErrorCode::ParseError, "entries rows have unequal lengths");
      for (Index j = 0; j < out.matrix.cols(); ++j)
        out.matrix(i, j) = Scalar::parse(out.field, row[j].get<std::string>());
    }
    if (document.contains("n") && document.at("n").get<Index>() != n)
      throw Error(ErrorCode::ParseError, "n does not match the entries");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

std::string matrix_text(const Mat& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

std::string matrix_latex(const Mat& m) {
  std::ostringstream out;
  out << "\\left(\\begin{array}{" << std::string(m.cols(), 'c') << "}\n";
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::string c = m(i, j).to_string();
      std::string tex;
      for (char ch : c) {
        if (ch == '*') continue;
        if (ch == 'a') tex += "\\alpha";
        else tex += ch;
      }
      out << (j ? " & " : "") << tex;
    }
    out << (i + 1 < m.rows() ? " \\\\\n" : "\n");
  }
  out << "\\end{array}\\right)";
  return out.str();
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  out << "jordan type " << cert.jordan_type.to_string() << "; f-symmetric "
      << yes_no(cert.f_symmetric) << "; supported " << yes_no(cert.supported);
  if (cert.lie_condition) {
    out << "; Lie condition";
    if (cert.lie_type) out << " (" << cert.lie_type->to_string() << ")";
    out << " " << yes_no(*cert.lie_condition);
  }
  if (cert.f_stable) out << "; F-stable (q=" << *cert.q << ") " << yes_no(*cert.f_stable);
  if (cert.dense_orbit) out << "; dense orbit " << yes_no(*cert.dense_orbit);
  return out.str();
}

std::string layout_text(const BlockLayout& layout) {
  std::ostringstream out;
  out << "partition " << layout.mu.to_string() << " (n = " << layout.n << ")\n";
  out << "weights  ";
  for (int w : layout.diagram.weights) out << " " << w;
  out << "\nnu       ";
  for (int v : layout.diagram.nu) out << " " << v;
  out << "\nl        ";
  for (int v : layout.l_seq) out << " " << v;
  out << "\nk        ";
  for (int v : layout.k_seq) out << " " << v;
  out << "\ndim g_2 = " << layout.dimension() << "\n";
  for (const Block& b : layout.blocks)
    out << "  " << b.label() << ": rows " << b.row_first << "-" << b.row_last << ", cols "
        << b.col_first << "-" << b.col_last << " (" << b.height << "x" << b.width << ")\n";
  return out.str();
}

}  // namespace nilcanon
