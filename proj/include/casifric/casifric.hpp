#ifndef CASIFRIC_CASIFRIC_HPP
#define CASIFRIC_CASIFRIC_HPP

#include "casifric/errors.hpp"
#include "casifric/friction.hpp"
#include "casifric/material_db.hpp"
#include "casifric/materials.hpp"
#include "casifric/oracle.hpp"
#include "casifric/quadrature.hpp"
#include "casifric/response.hpp"
#include "casifric/spectral_density.hpp"
#include "casifric/units.hpp"
#include "casifric/validity.hpp"

#endif
