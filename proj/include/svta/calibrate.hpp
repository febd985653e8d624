#pragma once

#include <array>
#include <vector>

#include "svta/common.hpp"

namespace svta {

inline constexpr int kNumBands = 14;

enum class BandKind { Reflective, Thermal };

// Per-band calibration constants. Thermal bands carry the effective central
// wavelength (stored in meters) used by the Planck inversion plus the
// temperature-correction pair (tcs, tci).
struct BandCalibration {
  int band_id = 0;                    // index 0..13
  int instrument_band = 0;            // instrument band number (1, 2, 3, 6, ...)
  BandKind kind = BandKind::Reflective;
  double reflectance_scale = 0.0;     // reflective only
  double reflectance_offset = 0.0;
  double radiance_scale = 0.0;        // thermal only
  double radiance_offset = 0.0;
  double wavelength_m = 0.0;          // effective central wavelength, meters
  double tcs = 1.0;                   // temperature correction slope
  double tci = 0.0;                   // temperature correction intercept, K
  double wavelength_um() const { return wavelength_m * 1e6; }
};

// c1 and c2 are always derived from h, c, k; never set independently.
struct PhysicalConstants {
  double h = 6.62607015e-34;   // Planck constant, J*s
  double c = 299792458.0;      // speed of light, m/s
  double k = 1.380649e-23;     // Boltzmann constant, J/K
  double c1() const { return 2.0 * h * c * c; }      // W*m^2/sr
  double c2() const { return h * c / k; }            // m*K
};

struct ScalingConstants {
  double bt_min = 180.0;                 // K, global over the corpus
  double bt_max = 340.0;                 // K
  double reflectance_factor = 0.01;      // fixed
};

// The 14-band set used throughout: kinds and central wavelengths follow the
// instrument band table; tcs=1, tci=0 unless a fixture overrides them.
std::array<BandCalibration, kNumBands> default_band_set();

double dn_to_reflectance(double dn, const BandCalibration& cal);
double dn_to_radiance(double dn, const BandCalibration& cal);

// Forward Planck oracle: spectral radiance of a blackbody at temperature t
// for wavelength wn (meters). Strictly increasing in t.
double planck_radiance(double t, double wn, const PhysicalConstants& pc = {});

// Exact inverse of planck_radiance under the wavelength reading of the
// effective central wave number. radiance <= 0 signals a fill/night pixel
// and raises DomainError.
double radiance_to_bt(double radiance, const BandCalibration& cal,
                      const PhysicalConstants& pc = {});

double bt_correct(double bt, const BandCalibration& cal);

double minmax_scale(double v, const ScalingConstants& sc);

// Full per-pixel chain: reflective bands via reflectance * 0.01, thermal
// bands via radiance -> BT -> correction -> min-max scaling. Domain failures
// (non-positive radiance) mark the band as fill instead of aborting.
std::array<float, kNumBands> calibrate_pixel(
    const std::array<double, kNumBands>& dn,
    const std::array<BandCalibration, kNumBands>& cals,
    const ScalingConstants& sc, const PhysicalConstants& pc = {});

// Inverse helpers used by the swath synthesizer (the forward model whose
// round trip the calibration tests exercise).
double reflectance_to_dn(double reflectance_percent, const BandCalibration& cal);
double radiance_to_dn(double radiance, const BandCalibration& cal);
double temperature_to_radiance(double t, const BandCalibration& cal,
                               const PhysicalConstants& pc = {});

}  // namespace svta
