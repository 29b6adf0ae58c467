#include "noonsim/schedule.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "noonsim/errors.hpp"
#include "noonsim/ideal.hpp"

namespace noonsim {

void ProtocolSpec::validate() const {
  if (n_target < 1 || m_target < 1) {
    throw std::domain_error("photon targets must satisfy N >= 1 and M >= 1 (got N=" +
                            std::to_string(n_target) + ", M=" + std::to_string(m_target) + ")");
  }
}

std::string segment_kind_name(SegmentKind k) {
  switch (k) {
    case SegmentKind::drive_pulse: return "drive_pulse";
    case SegmentKind::swap: return "swap";
    case SegmentKind::phase_correction: return "phase_correction";
  }
  throw std::invalid_argument("unknown segment kind");
}

const std::string& Schedule::boundary_stage(std::size_t boundary) const {
  static const std::string initial = "initial";
  if (boundary == 0) return initial;
  return segments.at(boundary - 1).stage;
}

std::pair<double, double> phase_correction_angles(int n_target, int m_target) {
  ProtocolSpec{n_target, m_target}.validate();
  // Just before the correction the r2 branch carries (-1)^M i and the parked
  // r1 branch carries -(-1)^N i. Solve e^{i theta_e} (-1)^M i = i and
  // e^{i theta_g} (-(-1)^N i) = 1.
  const double theta_e = (m_target % 2 == 0) ? 0.0 : M_PI;
  const double theta_g = (n_target % 2 == 0) ? M_PI / 2.0 : -M_PI / 2.0;
  return {theta_g, theta_e};
}

namespace {

double pi_pulse_duration(double amplitude) { return M_PI / amplitude; }

double swap_duration(double g, int rung) {
  // Full transfer on the rung-n pair, which oscillates at Rabi rate 2 g sqrt(n).
  return M_PI / (2.0 * g * std::sqrt(static_cast<double>(rung)));
}

std::vector<ScheduleSegment> build_segments(const ProtocolSpec& spec, const DeviceParams& p) {
  const int n = spec.n_target;
  const int m = spec.m_target;
  std::vector<ScheduleSegment> segs;
  segs.reserve(2 * (n + m) + 1);

  // Load r1 on the branch that starts in |e>: pump e->a, then swap the
  // excitation into r1, once per photon.
  for (int j = 1; j <= n; ++j) {
    ScheduleSegment pump;
    pump.kind = SegmentKind::drive_pulse;
    pump.transition = Transition::ea;
    pump.amplitude = p.omega_drive_ea;
    pump.phase = 0.0;
    pump.duration = pi_pulse_duration(p.omega_drive_ea);
    pump.stage = "r1_pump_" + std::to_string(j);
    segs.push_back(pump);

    ScheduleSegment swap;
    swap.kind = SegmentKind::swap;
    swap.resonator = Resonator::r1;
    swap.transition = Transition::ea;
    swap.rung = j;
    swap.duration = swap_duration(p.g1_ea, j);
    swap.stage = (j == n) ? "r1_loaded" : "r1_photon_" + std::to_string(j);
    segs.push_back(swap);
  }

  // One g<->e pulse exchanges the branch roles: the loaded branch parks in
  // |g> (dark for everything that follows until the final swap) and the
  // vacuum branch moves to |e>, ready to pump photons into r2.
  {
    ScheduleSegment exchange;
    exchange.kind = SegmentKind::drive_pulse;
    exchange.transition = Transition::ge;
    exchange.amplitude = p.omega_drive_ge;
    exchange.phase = 0.0;
    exchange.duration = pi_pulse_duration(p.omega_drive_ge);
    exchange.stage = "branches_exchanged";
    segs.push_back(exchange);
  }

  for (int k = 1; k <= m - 1; ++k) {
    ScheduleSegment pump;
    pump.kind = SegmentKind::drive_pulse;
    pump.transition = Transition::ea;
    pump.amplitude = p.omega_drive_ea;
    pump.phase = 0.0;
    pump.duration = pi_pulse_duration(p.omega_drive_ea);
    pump.stage = "r2_pump_" + std::to_string(k);
    segs.push_back(pump);

    ScheduleSegment swap;
    swap.kind = SegmentKind::swap;
    swap.resonator = Resonator::r2;
    swap.transition = Transition::ea;
    swap.rung = k;
    swap.duration = swap_duration(p.g2_ea, k);
    swap.stage = (k == m - 1) ? "r2_loaded" : "r2_photon_" + std::to_string(k);
    segs.push_back(swap);
  }

  // Instantaneous diagonal phases, then the closing g<->e swap deposits the
  // M-th photon into r2 and factors the qutrit out in |g>.
  {
    const auto [theta_g, theta_e] = phase_correction_angles(n, m);
    ScheduleSegment corr;
    corr.kind = SegmentKind::phase_correction;
    corr.theta_g = theta_g;
    corr.theta_e = theta_e;
    corr.duration = 0.0;
    corr.stage = "phase_corrected";
    segs.push_back(corr);

    ScheduleSegment last;
    last.kind = SegmentKind::swap;
    last.resonator = Resonator::r2;
    last.transition = Transition::ge;
    last.rung = m;
    last.duration = swap_duration(p.g2_ge, m);
    last.stage = "noon";
    segs.push_back(last);
  }
  return segs;
}

}  // namespace

TimingReport timing(const ProtocolSpec& spec, const DeviceParams& p) {
  spec.validate();
  p.validate();
  TimingReport r;
  for (int j = 1; j <= spec.n_target; ++j) {
    r.drive_time_first += j * M_PI / p.omega_drive_ea;
    r.swap_time_first += M_PI / (2.0 * p.g1_ea * std::sqrt(static_cast<double>(j)));
  }
  for (int k = 1; k <= spec.m_target; ++k) {
    r.drive_time_second += k * M_PI / p.omega_drive_ea;
    r.swap_time_second += M_PI / (2.0 * p.g2_ea * std::sqrt(static_cast<double>(k)));
  }
  r.closed_form_total =
      r.drive_time_first + r.swap_time_first + r.drive_time_second + r.swap_time_second;
  for (const auto& seg : build_segments(spec, p)) r.schedule_sum += seg.duration;
  r.totals_differ = std::abs(r.closed_form_total - r.schedule_sum) >
                    1e-12 * std::max(r.closed_form_total, r.schedule_sum);
  return r;
}

Schedule compile(const ProtocolSpec& spec, const DeviceParams& p) {
  return compile(spec, p, SpaceConfig::for_protocol(spec.n_target, spec.m_target));
}

Schedule compile(const ProtocolSpec& spec, const DeviceParams& p, const SpaceConfig& cfg) {
  spec.validate();
  p.validate();
  cfg.require_protocol_fit(spec.n_target, spec.m_target);

  Schedule s;
  s.spec = spec;
  s.space = cfg;
  s.segments = build_segments(spec, p);
  s.expected_states = expected_boundary_states(spec, s.segments, cfg);
  s.timing = timing(spec, p);
  return s;
}

namespace {

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string state_label(const Vec& state, const SpaceConfig& cfg) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (std::abs(state(i)) < 1e-12) continue;
    if (!first) os << " + ";
    first = false;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.4f%+.4fi)", state(i).real(), state(i).imag());
    os << buf << "|" << basis_label(i, cfg).str() << ">";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

void write_schedule_csv(const Schedule& s, std::ostream& os) {
  os << "# one row per segment; times in seconds, amplitudes and phases in rad/s and rad\n";
  os << "# expected_state lists the ideal state after the segment as amplitude|level:n1:n2> terms\n";
  os << "index,kind,transition,resonator,rung,amplitude_rad_s,phase_rad,theta_g_rad,theta_e_rad,"
        "duration_s,cumulative_s,stage,expected_state\n";
  double cumulative = 0.0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    cumulative += seg.duration;
    os << i << ',' << segment_kind_name(seg.kind) << ',';
    if (seg.kind == SegmentKind::drive_pulse || seg.kind == SegmentKind::swap) {
      os << transition_name(seg.transition);
    }
    os << ',';
    if (seg.kind == SegmentKind::swap) os << resonator_name(seg.resonator);
    os << ',';
    if (seg.kind == SegmentKind::swap) os << seg.rung;
    os << ',';
    if (seg.kind == SegmentKind::drive_pulse) os << format_sig(seg.amplitude);
    os << ',';
    if (seg.kind == SegmentKind::drive_pulse) os << format_sig(seg.phase);
    os << ',';
    if (seg.kind == SegmentKind::phase_correction) os << format_sig(seg.theta_g);
    os << ',';
    if (seg.kind == SegmentKind::phase_correction) os << format_sig(seg.theta_e);
    os << ',' << format_sig(seg.duration) << ',' << format_sig(cumulative) << ',' << seg.stage
       << ',' << '"' << state_label(s.expected_states.at(i + 1), s.space) << '"' << '\n';
  }
}

}  // namespace noonsim
