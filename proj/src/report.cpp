#include "qcoord/report.hpp"

#include <algorithm>
#include <sstream>

namespace qcoord {

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

void CheckReport::add(std::string input, std::string residual, bool pass) {
  cases.push_back({std::move(input), std::move(residual), pass});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.cases) cases.push_back({prefix + c.input, c.residual, c.pass});
  for (const auto& [k, v] : other.notes.items()) notes[prefix + k] = v;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["check"] = check;
  j["n"] = n;
  if (ell) j["ell"] = *ell;
  j["pass"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    arr.push_back({{"input", c.input}, {"residual", c.residual}, {"pass", c.pass}});
  }
  j["cases"] = std::move(arr);
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check << " n=" << n;
  if (ell) os << " ell=" << *ell;
  os << ": " << (cases.size() - failures()) << "/" << cases.size() << " cases pass";
  os << (passed() ? " [PASS]" : " [FAIL]") << "\n";
  for (const auto& [k, v] : notes.items()) os << "  note " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& c : cases) {
    if (!c.pass) os << "  FAIL " << c.input << " -> " << c.residual << "\n";
  }
  return os.str();
}

}  // namespace qcoord
