#ifndef CLASSLAB_CLASSLAB_HPP
#define CLASSLAB_CLASSLAB_HPP

#include "arithmetic.hpp"
#include "constructions.hpp"
#include "context.hpp"
#include "coprime_action.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "group.hpp"
#include "groupspec.hpp"
#include "instance_checks.hpp"
#include "permutation.hpp"
#include "projective.hpp"
#include "replay.hpp"
#include "report.hpp"
#include "socle_scan.hpp"
#include "verify.hpp"

#endif
