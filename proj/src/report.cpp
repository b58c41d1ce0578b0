#include "qit/report.hpp"

#include <iomanip>
#include <sstream>

namespace qit {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

FieldStatus status_of(const HomDim& d) { return d.is_unknown() ? FieldStatus::Unknown : FieldStatus::Exact; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void Report::add(std::string key, std::string value, FieldStatus status, std::vector<std::string> provenance) {
  fields_.push_back({std::move(key), std::move(value), status, std::move(provenance)});
}

void Report::add(std::string key, const HomDim& d) { add(std::move(key), d.to_string(), status_of(d)); }

void Report::add(std::string key, const DimInterval& d, std::vector<std::string> provenance) {
  add(std::move(key), d.to_string(), d.status(), std::move(provenance));
}

const ReportField* Report::find(const std::string& key) const {
  for (const auto& f : fields_)
    if (f.key == key) return &f;
  return nullptr;
}

std::string Report::render_text() const {
  std::ostringstream os;
  std::string section;
  for (const auto& f : fields_) {
    const auto dot = f.key.find('.');
    const std::string head = f.key.substr(0, dot);
    const std::string name = dot == std::string::npos ? f.key : f.key.substr(dot + 1);
    if (head != section) {
      if (!section.empty()) os << '\n';
      os << head << '\n';
      section = head;
    }
    std::string line = "  " + name;
    line.resize(std::max<std::size_t>(line.size() + 1, 26), ' ');
    line += f.value;
    if (f.status != FieldStatus::Exact) line += "  (" + to_string(f.status) + ")";
    if (!f.provenance.empty()) line += "  [" + join(f.provenance, ", ") + "]";
    os << line << '\n';
  }
  return os.str();
}

std::string Report::render_kv() const {
  std::ostringstream os;
  for (const auto& f : fields_) {
    os << f.key << " = " << f.value << '\n';
    if (f.status != FieldStatus::Exact) os << f.key << ".status = " << to_string(f.status) << '\n';
    if (!f.provenance.empty()) os << f.key << ".provenance = " << join(f.provenance, ",") << '\n';
  }
  return os.str();
}

Report analysis_report(const BoundQuiverAlgebra& a, const ClassFlags& flags, const DimReport& dims,
                       std::size_t cutoff) {
  const Quiver& q = a.quiver();
  Report r;
  r.add("algebra.vertices", std::to_string(q.vertex_count()));
  r.add("algebra.arrows", std::to_string(q.arrow_count()));
  r.add("algebra.dim", std::to_string(a.dimension()));
  r.add("algebra.basis_size", std::to_string(a.basis().size()));
  r.add("algebra.nilpotency_degree", std::to_string(a.nilpotency_degree()));
  r.add("algebra.relations", std::to_string(a.relations().size()));
  r.add("algebra.rules", std::to_string(a.rules().size()));
  r.add("algebra.cutoff", std::to_string(cutoff));

  r.add("class.monomial", yes_no(flags.monomial));
  r.add("class.radical_square_zero", yes_no(flags.radical_square_zero));
  r.add("class.right_serial", yes_no(flags.right_serial));
  r.add("class.special_biserial", yes_no(flags.special_biserial));
  r.add("class.gentle", yes_no(flags.gentle));

  r.add("gorenstein.id_right", dims.profile.id_right);
  r.add("gorenstein.pd_of_dual", dims.profile.pd_of_dual);
  r.add("gorenstein.m", dims.profile.m);
  r.add("gorenstein.selfinjective", yes_no(dims.selfinjective));

  r.add("dim.findim", dims.findim, dims.provenance);
  r.add("dim.phidim", dims.phidim, dims.provenance);
  r.add("dim.psidim", dims.psidim, dims.provenance);
  r.add("dim.gldim", dims.gldim);

  if (dims.monomial) {
    const auto& m = *dims.monomial;
    r.add("syzygy.classes", std::to_string(m.class_count));
    r.add("syzygy.ideal_classes", std::to_string(m.ideal_class_count));
    r.add("syzygy.phi_all", std::to_string(m.phi_all));
    r.add("syzygy.psi_all", std::to_string(m.psi_all));
    r.add("syzygy.phi_ideals", std::to_string(m.phi_ideals));
    r.add("syzygy.psi_ideals", std::to_string(m.psi_ideals));
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::string prefix = "simple." + q.vertex_name(v);
    r.add(prefix + ".pd", dims.simple_pd[v]);
    if (dims.monomial) {
      r.add(prefix + ".phi", std::to_string(dims.monomial->simple_phi[v]));
      r.add(prefix + ".psi", std::to_string(dims.monomial->simple_psi[v]));
    }
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) r.add("injective." + q.vertex_name(v) + ".pd", dims.injective_pd[v]);
  return r;
}

}  // namespace qit
