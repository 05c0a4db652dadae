#include "atlas/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace atlas {

Json node_list(NodeSet nodes) { return Json(nodes.to_vector()); }

Json rational_list(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v)
    out.push_back(to_string(q));
  return out;
}

Json quotient_class_json(const QuotientClass& q) {
  return Json{{"free", q.free}, {"torsion", q.torsion}};
}

Json element_json(const AffineWeylGroup& group, const ExtAffineElement& x) {
  Json out;
  out["t"] = group.datum().to_ambient(x.translation);
  if (auto perm = group.finite_permutation(x)) {
    for (int& p : *perm)
      ++p;
    out["w"] = *perm;
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < x.finite.rows(); ++i)
      rows.push_back(x.finite.row(i));
    out["w"] = rows;
  }
  return out;
}

std::string element_label(const AffineWeylGroup& group, const ExtAffineElement& x,
                          const ExtAffineElement& tau) {
  ReducedDecomposition rd = group.reduced_word(x);
  std::string omega;
  if (rd.omega == tau)
    omega = "tau";
  else if (rd.omega != group.identity())
    omega = "omega";
  if (rd.word.empty())
    return omega.empty() ? "e" : omega;
  return omega.empty() ? word_string(rd.word) : word_string(rd.word) + "*" + omega;
}

Json admissible_json(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  Json out = Json::array();
  for (const auto& x : adm.elements) {
    ReducedDecomposition rd = group.reduced_word(x);
    NewtonPoint nu = group.newton_vector(x);
    Json e = element_json(group, x);
    e["word"] = rd.word;
    e["omega"] = element_json(group, rd.omega);
    e["length"] = rd.word.size();
    e["is_straight"] = Rational(static_cast<Int>(rd.word.size())) == group.pair_with_two_rho(nu);
    e["newton"] = rational_list(group.datum().to_ambient(nu.coords));
    e["kottwitz"] = quotient_class_json(group.kottwitz(x));
    out.push_back(std::move(e));
  }
  return out;
}

Json dl_json(const DLDatum& dl) {
  Json frob = Json::object();
  for (int s = 0; s < dl.frobenius.size(); ++s)
    frob[std::to_string(s)] = dl.frobenius(s);
  return Json{{"ambient", node_list(dl.ambient)},
              {"parabolic", node_list(dl.parabolic)},
              {"word", dl.word},
              {"type", dl.ambient_type.to_string()},
              {"dim", dl.dimension},
              {"sigma_coxeter", dl.is_sigma_coxeter},
              {"frobenius", frob},
              {"frobenius_stabilizes_parabolic", dl.frobenius_stabilizes_parabolic}};
}

Json stratum_json(const AffineWeylGroup& group, const StratumRecord& r) {
  Json out;
  out["w"] = element_json(group, r.w);
  out["word"] = r.word;
  out["length"] = r.length;
  out["K"] = node_list(r.level);
  out["in_kw"] = r.in_kw;
  out["basic"] = r.is_basic;
  out["supp_raw"] = node_list(r.supp.raw);
  out["supp_sigma"] = node_list(r.supp.closure);
  out["i_set"] = node_list(r.i_set);
  out["dl"] = r.dl ? dl_json(*r.dl) : Json(nullptr);
  if (r.newton)
    out["newton"] = Json{{"nu", rational_list(group.datum().to_ambient(r.newton->first.coords))},
                         {"kappa", quotient_class_json(r.newton->second)}};
  else
    out["newton"] = nullptr;
  return out;
}

Json strata_json(const AffineWeylGroup& group, const std::vector<StratumRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records)
    out.push_back(stratum_json(group, r));
  return out;
}

Json comparison_json(const AffineWeylGroup& group, const ComparisonTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["x"] = element_json(group, row.x);
    r["word"] = row.word;
    r["c"] = row.c;
    if (table.mode == CompareMode::hoeve)
      r["finite_word"] = row.finite_word;
    r["generic"] = dl_json(row.generic);
    r["closed_form"] = Json{{"ambient", node_list(row.closed_ambient)},
                            {"parabolic", node_list(row.closed_parabolic)}};
    r["stratum"] = row.stratum_label;
    r["agrees"] = row.agrees;
    rows.push_back(std::move(r));
  }
  return Json{{"mode", to_string(table.mode)},
              {"g", table.g},
              {"rows", rows},
              {"mismatches", table.mismatches}};
}

namespace {

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

std::string rational_join(const RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& q : v)
    parts.push_back(to_string(q));
  return join(parts, " ");
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

// Columns padded to their widest cell, two spaces apart.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i)
        width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& cell = row[i];
      if (i)
        out << ',';
      if (cell.find_first_of(",\"") != std::string::npos) {
        out << '"';
        for (char ch : cell)
          out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
        out << '"';
      } else {
        out << cell;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<std::string>> admissible_rows(const AffineWeylGroup& group,
                                                      const AdmissibleSet& adm) {
  std::vector<std::vector<std::string>> rows{
      {"element", "length", "t", "w", "straight", "newton", "kottwitz"}};
  for (const auto& x : adm.elements) {
    int len = group.length(x);
    NewtonPoint nu = group.newton_vector(x);
    Json e = element_json(group, x);
    QuotientClass k = group.kottwitz(x);
    rows.push_back({element_label(group, x, adm.tau), std::to_string(len),
                    join(e["t"].get<std::vector<int>>(), " "),
                    e["w"].is_array() && !e["w"].empty() && e["w"][0].is_number()
                        ? join(e["w"].get<std::vector<int>>(), " ")
                        : e["w"].dump(),
                    bool_string(Rational(len) == group.pair_with_two_rho(nu)),
                    rational_join(group.datum().to_ambient(nu.coords)),
                    quotient_class_json(k).dump()});
  }
  return rows;
}

std::vector<std::vector<std::string>> strata_rows(const AffineWeylGroup& group,
                                                  const std::vector<StratumRecord>& records,
                                                  const ExtAffineElement& tau) {
  std::vector<std::vector<std::string>> rows{{"element", "length", "basic", "supp_sigma", "i_set",
                                              "dl_ambient", "dl_parabolic", "dl_type", "dim",
                                              "sigma_coxeter"}};
  for (const auto& r : records) {
    std::vector<std::string> row{element_label(group, r.w, tau), std::to_string(r.length),
                                 bool_string(r.is_basic), r.supp.closure.to_string(),
                                 r.i_set.to_string()};
    if (r.dl) {
      row.insert(row.end(), {r.dl->ambient.to_string(), r.dl->parabolic.to_string(),
                             r.dl->ambient_type.to_string(), std::to_string(r.dl->dimension),
                             bool_string(r.dl->is_sigma_coxeter)});
    } else {
      row.insert(row.end(), {"-", "-", "-", "-", "-"});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::string>> comparison_rows(const AffineWeylGroup& group,
                                                      const ComparisonTable& table,
                                                      const ExtAffineElement& tau) {
  const bool hoeve = table.mode == CompareMode::hoeve;
  std::vector<std::vector<std::string>> rows;
  rows.push_back({hoeve ? "w" : "x", "c", "generic_ambient", "generic_parabolic", "closed_ambient",
                  "closed_parabolic", "type", "dim", "stratum", "agrees"});
  for (const auto& row : table.rows)
    rows.push_back({hoeve ? word_string(row.finite_word) : element_label(group, row.x, tau),
                    std::to_string(row.c), row.generic.ambient.to_string(),
                    row.generic.parabolic.to_string(), row.closed_ambient.to_string(),
                    row.closed_parabolic.to_string(), row.generic.ambient_type.to_string(),
                    std::to_string(row.generic.dimension), row.stratum_label,
                    bool_string(row.agrees)});
  return rows;
}

}  // namespace

std::string admissible_csv(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  return csv(admissible_rows(group, adm));
}

std::string strata_csv(const AffineWeylGroup& group, const std::vector<StratumRecord>& records,
                       const ExtAffineElement& tau) {
  return csv(strata_rows(group, records, tau));
}

std::string comparison_csv(const AffineWeylGroup& group, const ComparisonTable& table,
                           const ExtAffineElement& tau) {
  return csv(comparison_rows(group, table, tau));
}

std::string admissible_text(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  return aligned(admissible_rows(group, adm));
}

std::string strata_text(const AffineWeylGroup& group, const std::vector<StratumRecord>& records,
                        const ExtAffineElement& tau) {
  return aligned(strata_rows(group, records, tau));
}

std::string comparison_text(const AffineWeylGroup& group, const ComparisonTable& table,
                            const ExtAffineElement& tau) {
  std::string out = "mode " + to_string(table.mode) + ", g = " + std::to_string(table.g) + "\n";
  out += aligned(comparison_rows(group, table, tau));
  for (const auto& m : table.mismatches)
    out += "MISMATCH " + m + "\n";
  return out;
}

std::string admissible_dot(const AffineWeylGroup& group, const AdmissibleSet& adm) {
  std::ostringstream out;
  out << "digraph adm {\n  rankdir=BT;\n  node [shape=circle];\n";
  const auto& xs = adm.elements;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << "  n" << i << " [label=\"" << element_label(group, xs[i], adm.tau) << "\""
        << (is_basic_stratum(group, xs[i]) ? ", shape=doublecircle" : "") << "];\n";
  std::vector<int> len;
  for (const auto& x : xs)
    len.push_back(group.length(x));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (len[j] == len[i] + 1 && group.bruhat_leq(xs[i], xs[j]))
        out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace atlas
