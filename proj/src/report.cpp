#include <json.hpp>

#include "superyangian/relations.hpp"

namespace sy {

std::string report_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = r.version;
  const RunConfig& c = r.config;
  j["config"] = {{"p", c.p},
                 {"M", c.M},
                 {"N", c.N},
                 {"sigma", c.sigma},
                 {"mu", c.mu.parts()},
                 {"series_order", c.levels.R},
                 {"gen_order", c.levels.gen},
                 {"cubic_order", c.levels.cubic},
                 {"quartic_order", c.levels.quartic},
                 {"inj_sum", c.levels.inj_sum},
                 {"deterministic", c.deterministic}};
  ordered_json rd = ordered_json::object();
  for (const auto& [k, v] : describe(c.readings)) rd[k] = v;
  j["readings"] = rd;
  ordered_json fams = ordered_json::array();
  for (const auto& f : r.families) {
    ordered_json fl = ordered_json::array();
    for (const auto& [where, delta] : f.failures) fl.push_back({{"indices", where}, {"delta", delta}});
    fams.push_back({{"id", f.id},
                    {"checked", f.checked},
                    {"failed", f.failed},
                    {"passed", f.passed()},
                    {"failures", fl},
                    {"millis", f.millis}});
  }
  j["families"] = fams;
  j["summary"] = {{"families", r.families.size()}, {"checked", r.checked()}, {"failed", r.failed()}, {"passed", r.passed()}};
  return j.dump(2) + "\n";
}

}  // namespace sy
