#include "svta/calibrate.hpp"

#include <algorithm>
#include <cmath>

namespace svta {

namespace {

struct BandSpec {
  int instrument_band;
  BandKind kind;
  double wavelength_um;
};

// 14-band subset: visible/NIR/SWIR bands are reflective, emissive bands
// thermal. Band 26 (1.375 um cirrus) is a solar band.
constexpr BandSpec kBandTable[kNumBands] = {
    {1, BandKind::Reflective, 0.659},  {2, BandKind::Reflective, 0.865},
    {3, BandKind::Reflective, 0.47},   {6, BandKind::Reflective, 1.64},
    {7, BandKind::Reflective, 2.13},   {21, BandKind::Thermal, 3.96},
    {26, BandKind::Reflective, 1.375}, {27, BandKind::Thermal, 6.72},
    {28, BandKind::Thermal, 7.33},     {29, BandKind::Thermal, 8.55},
    {30, BandKind::Thermal, 9.73},     {31, BandKind::Thermal, 11.03},
    {32, BandKind::Thermal, 12.20},    {33, BandKind::Thermal, 13.34},
};

// DN layout for the synthetic bands: 16-bit integers with a small offset so
// negative-radiance paths stay reachable in tests.
constexpr double kReflDnOffset = 1000.0;
constexpr double kReflDnSpan = 60000.0;   // DN span covering reflectance 0..100%
constexpr double kThermDnOffset = 500.0;
constexpr double kThermDnSpan = 60000.0;  // DN span covering radiance 0..L(360K)

}  // namespace

std::array<BandCalibration, kNumBands> default_band_set() {
  PhysicalConstants pc;
  std::array<BandCalibration, kNumBands> out;
  for (int i = 0; i < kNumBands; ++i) {
    BandCalibration cal;
    cal.band_id = i;
    cal.instrument_band = kBandTable[i].instrument_band;
    cal.kind = kBandTable[i].kind;
    cal.wavelength_m = kBandTable[i].wavelength_um * 1e-6;
    if (cal.kind == BandKind::Reflective) {
      // (dn - offset) * scale * 100 spans 0..100 percent over the DN span.
      cal.reflectance_scale = 1.0 / kReflDnSpan;
      cal.reflectance_offset = kReflDnOffset;
    } else {
      double radiance_max = planck_radiance(360.0, cal.wavelength_m, pc);
      cal.radiance_scale = radiance_max / kThermDnSpan;
      cal.radiance_offset = kThermDnOffset;
    }
    out[i] = cal;
  }
  return out;
}

double dn_to_reflectance(double dn, const BandCalibration& cal) {
  if (cal.kind != BandKind::Reflective)
    throw KindMismatchError("dn_to_reflectance: band " +
                            std::to_string(cal.band_id) + " is not reflective");
  return (dn - cal.reflectance_offset) * cal.reflectance_scale * 100.0;
}

double dn_to_radiance(double dn, const BandCalibration& cal) {
  if (cal.kind != BandKind::Thermal)
    throw KindMismatchError("dn_to_radiance: band " +
                            std::to_string(cal.band_id) + " is not thermal");
  return (dn - cal.radiance_offset) * cal.radiance_scale;
}

double planck_radiance(double t, double wn, const PhysicalConstants& pc) {
  if (t <= 0.0) throw DomainError("planck_radiance: temperature must be > 0");
  if (wn <= 0.0) throw DomainError("planck_radiance: wavelength must be > 0");
  double lam5 = wn * wn * wn * wn * wn;
  return pc.c1() / (lam5 * std::expm1(pc.c2() / (wn * t)));
}

double radiance_to_bt(double radiance, const BandCalibration& cal,
                      const PhysicalConstants& pc) {
  if (radiance <= 0.0)
    throw DomainError("radiance_to_bt: non-positive radiance (fill/night pixel)");
  double wn = cal.wavelength_m;
  if (wn <= 0.0) throw DomainError("radiance_to_bt: invalid wavelength");
  double lam5 = wn * wn * wn * wn * wn;
  return pc.c2() / (wn * std::log1p(pc.c1() / (radiance * lam5)));
}

double bt_correct(double bt, const BandCalibration& cal) {
  if (cal.kind != BandKind::Thermal)
    throw KindMismatchError("bt_correct: band " + std::to_string(cal.band_id) +
                            " is not thermal");
  return (bt - cal.tci) / cal.tcs;
}

double minmax_scale(double v, const ScalingConstants& sc) {
  if (!(sc.bt_max > sc.bt_min))
    throw DomainError("minmax_scale: degenerate range (max <= min)");
  double s = (v - sc.bt_min) / (sc.bt_max - sc.bt_min);
  return std::clamp(s, 0.0, 1.0);
}

std::array<float, kNumBands> calibrate_pixel(
    const std::array<double, kNumBands>& dn,
    const std::array<BandCalibration, kNumBands>& cals,
    const ScalingConstants& sc, const PhysicalConstants& pc) {
  std::array<float, kNumBands> out{};
  for (int b = 0; b < kNumBands; ++b) {
    const BandCalibration& cal = cals[b];
    if (cal.kind == BandKind::Reflective) {
      double refl = dn_to_reflectance(dn[b], cal);
      out[b] = static_cast<float>(
          std::clamp(refl * sc.reflectance_factor, 0.0, 1.0));
    } else {
      double radiance = dn_to_radiance(dn[b], cal);
      if (radiance <= 0.0) {
        out[b] = kFill;  // fill marker instead of aborting the granule
        continue;
      }
      double bt = bt_correct(radiance_to_bt(radiance, cal, pc), cal);
      out[b] = static_cast<float>(minmax_scale(bt, sc));
    }
  }
  return out;
}

double reflectance_to_dn(double reflectance_percent, const BandCalibration& cal) {
  if (cal.kind != BandKind::Reflective)
    throw KindMismatchError("reflectance_to_dn: band is not reflective");
  return reflectance_percent / (cal.reflectance_scale * 100.0) +
         cal.reflectance_offset;
}

double radiance_to_dn(double radiance, const BandCalibration& cal) {
  if (cal.kind != BandKind::Thermal)
    throw KindMismatchError("radiance_to_dn: band is not thermal");
  return radiance / cal.radiance_scale + cal.radiance_offset;
}

double temperature_to_radiance(double t, const BandCalibration& cal,
                               const PhysicalConstants& pc) {
  // Forward model of the full thermal chain: physical temperature is what
  // bt_correct recovers, so the pre-correction BT is t * tcs + tci.
  double bt_pre = t * cal.tcs + cal.tci;
  return planck_radiance(bt_pre, cal.wavelength_m, pc);
}

}  // namespace svta
