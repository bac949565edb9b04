#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eulerfan/patching.hpp"
#include "eulerfan/riemann1d.hpp"
#include "eulerfan/subsolution.hpp"
#include "eulerfan/verifier.hpp"

namespace eulerfan::io {

/// Malformed or incomplete input document; the message names the offender.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// -- input documents -------------------------------------------------------

/// {"c_v": number, "left": {"rho","u","v","p"}, "right": {...}}
riemann1d::RiemannData read_riemann_data(const json& doc);
json write_riemann_data(const riemann1d::RiemannData& data);

/// Full quintuple document: the Riemann data fields plus
/// {"mu": [mu0,mu1,mu2], "regions": [{"rho","alpha","beta","gamma","delta",
/// "C","p"}, ...]}
verifier::FanQuintuple read_quintuple(const json& doc);
json write_quintuple(const verifier::FanQuintuple& q);

// -- output documents ------------------------------------------------------

json write_pattern(const riemann1d::WavePattern& pattern);
json write_report(const verifier::ResidualReport& report);
json write_subsolution(const subsolution::FindResult& result);
json write_window(const subsolution::SmallnessWindow& window);
json write_patched(const patching::PatchedSolution& patched);
json write_profile_samples(const riemann1d::SelfSimilarProfile& profile,
                           const std::vector<double>& xi);

/// Round-trips for the editable documents.
subsolution::FindResult read_subsolution(const json& doc);

/// DSV table of the 1-wave curve through the left state and the 3-wave
/// curve through the right state in the p-v plane; header p,v_shock1,v_wave3.
std::string curves_dsv(const riemann1d::RiemannData& data, int samples);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& doc);
std::string dump(const json& doc);

}  // namespace eulerfan::io
