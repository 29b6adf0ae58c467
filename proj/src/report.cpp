#include "noonsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "noonsim/ideal.hpp"

namespace noonsim {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Minimal ordered JSON emitter; nlohmann's writer does not pin the double
/// formatting the report promises.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  void open(const std::string& key = "") {
    comma();
    label(key);
    os_ << "{";
    first_ = true;
    depth_ += 1;
  }
  void close() {
    os_ << "\n" << indent(depth_ - 1) << "}";
    depth_ -= 1;
    first_ = false;
    if (depth_ == 0) os_ << "\n";
  }
  void field(const std::string& key, double v) {
    comma();
    label(key);
    os_ << num(v);
  }
  void field(const std::string& key, int v) {
    comma();
    label(key);
    os_ << v;
  }
  void field(const std::string& key, bool v) {
    comma();
    label(key);
    os_ << (v ? "true" : "false");
  }
  void field(const std::string& key, const std::string& v) {
    comma();
    label(key);
    os_ << '"' << v << '"';
  }
  template <typename Seq>
  void array(const std::string& key, const Seq& values) {
    comma();
    label(key);
    os_ << "[";
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(std::size(values)); ++i) {
      if (i) os_ << ", ";
      os_ << num(values[i]);
    }
    os_ << "]";
  }

 private:
  void comma() {
    if (depth_ > 0) {
      if (!first_) os_ << ",";
      os_ << "\n" << indent(depth_);
    }
    first_ = false;
  }
  void label(const std::string& key) {
    if (!key.empty()) os_ << '"' << key << "\": ";
  }
  static std::string indent(int depth) { return std::string(2 * static_cast<std::size_t>(depth), ' '); }

  std::ostream& os_;
  int depth_ = 0;
  bool first_ = true;
};

}  // namespace

void write_report_json(const RunReport& r, std::ostream& os) {
  JsonWriter w(os);
  w.open();

  w.open("config_echo");
  w.field("N", r.n_target);
  w.field("M", r.m_target);
  w.field("mode", r.mode);
  w.field("delta_over_g", r.delta_over_g);
  w.field("d1", r.d1);
  w.field("d2", r.d2);
  w.field("angular_unit_note", std::string("all *_rad_s values are angular, omega = 2*pi*f"));
  w.field("omega_ge_rad_s", r.params.omega_ge);
  w.field("omega_ea_rad_s", r.params.omega_ea);
  w.field("g1_ge_rad_s", r.params.g1_ge);
  w.field("g1_ea_rad_s", r.params.g1_ea);
  w.field("g2_ge_rad_s", r.params.g2_ge);
  w.field("g2_ea_rad_s", r.params.g2_ea);
  w.field("drive_ge_rad_s", r.params.omega_drive_ge);
  w.field("drive_ea_rad_s", r.params.omega_drive_ea);
  w.close();

  w.open("timing");
  w.field("drive_time_first_s", r.timing.drive_time_first);
  w.field("swap_time_first_s", r.timing.swap_time_first);
  w.field("drive_time_second_s", r.timing.drive_time_second);
  w.field("swap_time_second_s", r.timing.swap_time_second);
  w.field("schedule_sum_s", r.timing.schedule_sum);
  w.field("closed_form_total_s", r.timing.closed_form_total);
  w.field("totals_differ", r.timing.totals_differ);
  w.field("note", std::string("the closed-form drive term charges j*pi/Omega per step (quadratic "
                              "growth); the compiled schedule uses one pi pulse per step"));
  w.close();

  w.field("final_fidelity", r.final_fidelity);
  w.field("field_fidelity", r.field_fidelity);
  w.field("qutrit_purity_final", r.qutrit_purity_final);
  w.array("per_boundary_fidelity", r.per_boundary_fidelity);
  w.field("max_boundary_deviation", r.max_boundary_deviation);
  w.array("photon_distribution_r1", r.photon_distribution_r1);
  w.array("photon_distribution_r2", r.photon_distribution_r2);

  w.open("diagnostics");
  w.field("max_norm_drift", r.max_norm_drift);
  w.field("max_swap_excitation_drift", r.max_swap_excitation_drift);
  w.field("max_guard_population", r.max_guard_population);
  w.close();

  w.close();
}

void write_trajectory_csv(const Trajectory& traj, const Schedule& schedule,
                          TrajectoryFormat format, std::ostream& os) {
  const SpaceConfig& cfg = schedule.space;
  if (format == TrajectoryFormat::populations) {
    const Vec target = noon_target(schedule.spec.n_target, schedule.spec.m_target, cfg);
    os << "# time in seconds; p_* are qutrit level populations; mean_n* are mean photon numbers\n";
    os << "time_s,p_g,p_e,p_a,mean_n1,mean_n2,fidelity_to_target\n";
    for (const auto& s : traj.samples) {
      const Eigen::VectorXd lp = level_populations(s.state, cfg);
      os << num(s.time) << ',' << num(lp(0)) << ',' << num(lp(1)) << ',' << num(lp(2)) << ','
         << num(mean_photons(s.state, Resonator::r1, cfg)) << ','
         << num(mean_photons(s.state, Resonator::r2, cfg)) << ','
         << num(fidelity(s.state, target)) << '\n';
    }
  } else {
    os << "# time in seconds; basis_label = level:n1:n2; rows with |amplitude| <= 1e-14 omitted\n";
    os << "time_s,basis_label,re_amplitude,im_amplitude\n";
    for (const auto& s : traj.samples) {
      for (Eigen::Index i = 0; i < s.state.size(); ++i) {
        if (std::abs(s.state(i)) <= 1e-14) continue;
        os << num(s.time) << ',' << basis_label(i, cfg).str() << ',' << num(s.state(i).real())
           << ',' << num(s.state(i).imag()) << '\n';
      }
    }
  }
}

}  // namespace noonsim
