#pragma once

#include "scoreseq/bounds.hpp"
#include "scoreseq/checker.hpp"
#include "scoreseq/errors.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/slicing.hpp"
#include "scoreseq/types.hpp"
