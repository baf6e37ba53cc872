#include "afp/afp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "afp/collineation.hpp"
#include "afp/plane_builders.hpp"
#include "afp/plane_io.hpp"
#include "afp/skewfield.hpp"
#include "afp/trgroup.hpp"

#define AFP_VERSION_STRING "0.1.0"

struct afp_plane {
  explicit afp_plane(afp::AffinePlane p) : plane(std::move(p)) {}

  afp::AffinePlane plane;
  std::optional<afp::VerificationReport> axioms;
  std::optional<afp::TranslationGroup> group;
  std::optional<std::string> group_error;
  std::optional<std::vector<afp::Dilation>> dilations;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

template <class F>
afp_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const afp::InvalidInput& e) {
    g_last_error = e.what();
    return AFP_INVALID_ARGUMENT;
  } catch (const afp::VerificationError& e) {
    g_last_error = e.what();
    return AFP_VERIFICATION_FAILED;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AFP_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AFP_INTERNAL_ERROR;
  }
}

afp_status require(bool ok, const char* message) {
  if (ok) return AFP_OK;
  g_last_error = message;
  return AFP_INVALID_ARGUMENT;
}

const afp::VerificationReport& axioms_of(afp_plane& h) {
  if (!h.axioms) h.axioms = h.plane.check_axioms();
  return *h.axioms;
}

// Translation group of a plane that passed the axioms; on closure failure the
// message is kept and the group stays empty.
const afp::TranslationGroup* group_of(afp_plane& h) {
  if (!h.group && !h.group_error) {
    try {
      h.group = afp::TranslationGroup::build(h.plane, afp::enumerate_translations(h.plane));
    } catch (const afp::VerificationError& e) {
      h.group_error = e.what();
    }
  }
  return h.group ? &*h.group : nullptr;
}

const std::vector<afp::Dilation>& dilations_of(afp_plane& h) {
  if (!h.dilations) h.dilations = afp::enumerate_dilations(h.plane);
  return *h.dilations;
}

afp_status finish(const afp::VerificationReport& report, nlohmann::json doc, char** out) {
  doc["checks"] = report.to_json();
  *out = dup_string(dump(doc));
  return report.all_passed() ? AFP_OK : AFP_VERIFICATION_FAILED;
}

// Axioms plus the translation group checks. Returns the group when usable.
const afp::TranslationGroup* group_pipeline(afp_plane& h, afp::VerificationReport& report, nlohmann::json& doc) {
  report.append(axioms_of(h));
  if (!report.all_passed()) return nullptr;
  const auto* group = group_of(h);
  if (!group) {
    report.fail("translation_group_closed", *h.group_error, nlohmann::json{{"message", *h.group_error}});
    return nullptr;
  }
  const auto& dils = dilations_of(h);
  doc["group_order"] = group->order();
  doc["num_dilations"] = dils.size();
  doc["num_directions"] = h.plane.num_directions();
  report.pass("translation_group_closed", std::to_string(group->order()) + " translations");
  report.append(afp::verify_translation_group(h.plane, *group, dils));
  return group;
}

nlohmann::json describe_dilation(const afp::AffinePlane& plane, const afp::Dilation& d, std::size_t index) {
  std::vector<std::uint32_t> fixed;
  for (auto p : d.fixed_points()) fixed.push_back(p.value);
  nlohmann::json item{{"index", index},
                      {"image", std::vector<std::uint32_t>(d.map().images().begin(), d.map().images().end())},
                      {"fixed_points", fixed}};
  auto tr = afp::classify_translation(plane, d);
  if (d.is_identity()) {
    item["kind"] = "identity";
  } else if (tr) {
    item["kind"] = "translation";
  } else if (fixed.size() == 1) {
    item["kind"] = "homothety";
  } else {
    item["kind"] = "dilation";
  }
  if (tr && tr->direction()) {
    item["direction"] = tr->direction()->value;
  } else {
    item["direction"] = nullptr;
  }
  return item;
}

}  // namespace

extern "C" {

const char* afp_version(void) { return AFP_VERSION_STRING; }

const char* afp_last_error(void) { return g_last_error.c_str(); }

void afp_string_free(char* s) { std::free(s); }

afp_status afp_plane_build_ag2(unsigned q, const unsigned* poly, size_t poly_len, afp_plane** out) {
  if (auto s = require(out != nullptr, "null output handle")) return s;
  *out = nullptr;
  return guarded([&] {
    std::optional<std::vector<unsigned>> modulus;
    if (poly && poly_len > 0) modulus = std::vector<unsigned>(poly, poly + poly_len);
    *out = new afp_plane(afp::ag2(afp::gf_of_order(q, modulus)));
    return AFP_OK;
  });
}

afp_status afp_plane_from_json(const char* json, afp_plane** out) {
  if (auto s = require(out != nullptr && json != nullptr, "null argument")) return s;
  *out = nullptr;
  return guarded([&] {
    *out = new afp_plane(afp::plane_from_json_text(json));
    return AFP_OK;
  });
}

afp_status afp_plane_load_file(const char* path, afp_plane** out) {
  if (auto s = require(out != nullptr && path != nullptr, "null argument")) return s;
  *out = nullptr;
  std::ifstream in(path);
  if (!in) {
    g_last_error = std::string("cannot open ") + path;
    return AFP_IO_ERROR;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return afp_plane_from_json(buf.str().c_str(), out);
}

void afp_plane_free(afp_plane* plane) { delete plane; }

size_t afp_plane_num_points(const afp_plane* plane) { return plane ? plane->plane.num_points() : 0; }

size_t afp_plane_num_lines(const afp_plane* plane) { return plane ? plane->plane.num_lines() : 0; }

afp_status afp_plane_to_json(const afp_plane* plane, char** out_json) {
  if (auto s = require(plane && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = dup_string(dump(afp::plane_to_json(plane->plane)));
    return AFP_OK;
  });
}

afp_status afp_check_axioms(afp_plane* plane, char** out_report) {
  if (auto s = require(plane && out_report, "null argument")) return s;
  return guarded([&] {
    const auto& report = axioms_of(*plane);
    nlohmann::json doc{{"num_points", plane->plane.num_points()}, {"num_lines", plane->plane.num_lines()}};
    if (report.all_passed()) doc["num_directions"] = plane->plane.num_directions();
    return finish(report, std::move(doc), out_report);
  });
}

afp_status afp_enumerate(afp_plane* plane, afp_enumeration what, char** out_json) {
  if (auto s = require(plane && out_json, "null argument")) return s;
  if (auto s = require(what == AFP_ENUM_TRANSLATIONS || what == AFP_ENUM_DILATIONS, "unknown enumeration")) return s;
  return guarded([&] {
    afp::VerificationReport report;
    report.append(axioms_of(*plane));
    nlohmann::json doc{{"what", what == AFP_ENUM_TRANSLATIONS ? "translations" : "dilations"}};
    if (!report.all_passed()) return finish(report, std::move(doc), out_json);

    auto items = nlohmann::json::array();
    if (what == AFP_ENUM_TRANSLATIONS) {
      const auto translations = afp::enumerate_translations(plane->plane);
      for (std::size_t i = 0; i < translations.size(); ++i) {
        items.push_back(describe_dilation(plane->plane, translations[i].dilation(), i));
      }
    } else {
      const auto& dils = dilations_of(*plane);
      for (std::size_t i = 0; i < dils.size(); ++i) items.push_back(describe_dilation(plane->plane, dils[i], i));
    }
    doc["count"] = items.size();
    doc["items"] = std::move(items);
    return finish(report, std::move(doc), out_json);
  });
}

afp_status afp_verify_group(afp_plane* plane, char** out_report) {
  if (auto s = require(plane && out_report, "null argument")) return s;
  return guarded([&] {
    afp::VerificationReport report;
    nlohmann::json doc = nlohmann::json::object();
    group_pipeline(*plane, report, doc);
    return finish(report, std::move(doc), out_report);
  });
}

afp_status afp_verify_skewfield(afp_plane* plane, unsigned base_point, int run_oracle, char** out_report) {
  if (auto s = require(plane && out_report, "null argument")) return s;
  if (auto s = require(base_point < plane->plane.num_points(), "base point out of range")) return s;
  return guarded([&] {
    afp::VerificationReport report;
    nlohmann::json doc{{"base_point", base_point}};
    const auto* group = group_pipeline(*plane, report, doc);
    if (!group || !report.all_passed()) return finish(report, std::move(doc), out_report);

    const afp::PointId base(base_point);
    std::optional<afp::TPEndoSet> set;
    try {
      set = afp::generate_tp_endos(plane->plane, *group, base);
      report.pass("tp_endomorphisms_closed", std::to_string(set->size()) + " elements");
    } catch (const afp::VerificationError& e) {
      report.fail("tp_endomorphisms_closed", e.what(), nlohmann::json{{"message", e.what()}});
      return finish(report, std::move(doc), out_report);
    }

    report.append(afp::verify_skew_field(plane->plane, *group, *set));
    if (run_oracle) report.append(afp::verify_oracle_equivalence(*group, *set));

    const auto comm = afp::check_multiplicative_commutativity(*set);
    doc["multiplicative_commutativity"] = {{"commutative", comm.commutative}};
    if (comm.witness) doc["multiplicative_commutativity"]["witness"] = {comm.witness->first, comm.witness->second};

    const auto n = set->size();
    doc["size"] = n;
    doc["line_size"] = plane->plane.points_on(afp::LineId(0)).size();
    auto elements = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      auto e = afp::endo_to_json(set->elements[i]);
      if (set->source[i]) {
        const auto img = set->source[i]->map().images();
        e["dilation"] = std::vector<std::uint32_t>(img.begin(), img.end());
      }
      elements.push_back(std::move(e));
    }
    doc["elements"] = std::move(elements);
    auto add = nlohmann::json::array(), mul = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      auto add_row = nlohmann::json::array(), mul_row = nlohmann::json::array();
      for (std::size_t j = 0; j < n; ++j) {
        add_row.push_back(set->add(i, j));
        mul_row.push_back(set->mul(i, j));
      }
      add.push_back(std::move(add_row));
      mul.push_back(std::move(mul_row));
    }
    doc["tables"] = {{"add", std::move(add)}, {"mul", std::move(mul)}};
    return finish(report, std::move(doc), out_report);
  });
}

afp_status afp_check_endomorphism(afp_plane* plane, const char* endo_json, unsigned base_point, char** out_report) {
  if (auto s = require(plane && endo_json && out_report, "null argument")) return s;
  if (auto s = require(base_point < plane->plane.num_points(), "base point out of range")) return s;
  return guarded([&] {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(endo_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw afp::InvalidInput(std::string("endomorphism JSON does not parse: ") + e.what());
    }
    const auto alpha = afp::endo_from_json(parsed);

    afp::VerificationReport report;
    report.append(axioms_of(*plane));
    nlohmann::json doc = nlohmann::json::object();
    if (!report.all_passed()) return finish(report, std::move(doc), out_report);
    const auto* group = group_of(*plane);
    if (!group) {
      report.fail("translation_group_closed", *plane->group_error, nlohmann::json{{"message", *plane->group_error}});
      return finish(report, std::move(doc), out_report);
    }
    if (alpha.group_order() != group->order()) {
      throw afp::InvalidInput("endomorphism group_order " + std::to_string(alpha.group_order()) +
                              " does not match the translation group order " + std::to_string(group->order()));
    }

    if (auto v = afp::find_homomorphism_violation(*group, alpha)) {
      report.fail("group_endomorphism", "homomorphism law fails",
                  nlohmann::json{{"pair", {v->first.value, v->second.value}}});
    } else {
      report.pass("group_endomorphism");
    }
    if (auto s = afp::find_trace_violation(*group, alpha)) {
      report.fail("trace_preserving", "image changes direction", nlohmann::json{{"translation", s->value}});
    } else {
      report.pass("trace_preserving");
    }
    if (report.all_passed() && !alpha.is_zero() && group->is_transitive()) {
      const afp::PointId base(base_point);
      const auto delta = afp::recover_dilation(plane->plane, *group, alpha, base);
      const auto img = delta.map().images();
      doc["dilation"] = std::vector<std::uint32_t>(img.begin(), img.end());
      doc["inverse"] = afp::endo_to_json(afp::invert(plane->plane, *group, alpha, base));
      report.pass("inverse_verified");
    }
    return finish(report, std::move(doc), out_report);
  });
}

}  // extern "C"
