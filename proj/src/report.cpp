#include "homhopf/report.hpp"

#include <sstream>

namespace homhopf {

const IdentityTally* AxiomReport::find(const std::string& identity) const {
  for (const auto& t : identities)
    if (t.name == identity) return &t;
  return nullptr;
}

bool AxiomReport::identity_passed(const std::string& identity) const {
  const IdentityTally* t = find(identity);
  return t != nullptr && t->violations == 0;
}

void AxiomReport::absorb(const AxiomReport& other, const std::string& prefix) {
  for (auto t : other.identities) {
    t.name = prefix + t.name;
    bool merged = false;
    for (auto& mine : identities)
      if (mine.name == t.name) {
        mine.instances += t.instances;
        mine.violations += t.violations;
        merged = true;
      }
    if (!merged) identities.push_back(t);
  }
  for (auto v : other.violations)
    if (violations.size() < cap) {
      v.identity = prefix + v.identity;
      violations.push_back(std::move(v));
    }
  violation_count += other.violation_count;
}

ReportBuilder::ReportBuilder(std::string subject, const CheckOptions& opts) {
  report_.subject = std::move(subject);
  report_.cap = opts.max_violations;
}

IdentityTally& ReportBuilder::tally(const std::string& identity) {
  for (auto& t : report_.identities)
    if (t.name == identity) return t;
  report_.identities.push_back({identity, 0, 0});
  return report_.identities.back();
}

void ReportBuilder::declare(const std::string& identity) { tally(identity); }

void ReportBuilder::compare(const std::string& identity, std::initializer_list<std::size_t> witness,
                            const SparseVec& lhs, const SparseVec& rhs) {
  IdentityTally& t = tally(identity);
  ++t.instances;
  if (lhs == rhs) return;
  ++t.violations;
  ++report_.violation_count;
  if (report_.violations.size() < report_.cap) report_.violations.push_back({identity, witness, lhs, rhs});
}

void ReportBuilder::compare(const std::string& identity, std::initializer_list<std::size_t> witness, const Vec& lhs,
                            const Vec& rhs) {
  compare(identity, witness, SparseVec::from_dense(lhs), SparseVec::from_dense(rhs));
}

void ReportBuilder::compare(const std::string& identity, std::initializer_list<std::size_t> witness, const Scalar& lhs,
                            const Scalar& rhs) {
  compare(identity, witness, Vec(lhs.field(), {lhs}), Vec(rhs.field(), {rhs}));
}

std::string format_report(const AxiomReport& r, const std::vector<std::string>& basis_names) {
  std::ostringstream os;
  for (const auto& t : r.identities) {
    os << "  " << t.name << ": " << (t.violations == 0 ? "pass" : "fail") << " (" << t.instances << " instances";
    if (t.violations) os << ", " << t.violations << " violations";
    os << ")\n";
  }
  for (const auto& v : r.violations) {
    os << "  violation " << v.identity << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      const std::size_t w = v.witness[i];
      if (w < basis_names.size())
        os << basis_names[w];
      else
        os << w;
    }
    os << ")\n    lhs = " << to_string(v.lhs) << "\n    rhs = " << to_string(v.rhs) << "\n";
  }
  if (r.violation_count > r.violations.size())
    os << "  ... " << (r.violation_count - r.violations.size()) << " further violations not shown\n";
  os << r.subject << ": " << (r.passed() ? "pass" : "fail") << " (" << r.identities.size() << " identities, "
     << r.violation_count << " violations)\n";
  return os.str();
}

}  // namespace homhopf
