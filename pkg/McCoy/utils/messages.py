# McCoy/utils/messages.py

# =====================================================================================
# ====== CONSTRUCTION ERRORS ======
# =====================================================================================

MSG_RING_EMPTY = "❌ Cannot build {label}: a ring needs at least one element."
MSG_ORDER_CAP = "❌ Refusing to build {label}: order {order} exceeds the order cap {cap}."
MSG_ZERO_IS_ONE = "❌ Cannot build {label}: zero equals one in a ring with more than one element."
MSG_ZMOD_MODULUS = "❌ Z/nZ needs a modulus n ≥ 1, got {n}."
MSG_SIZE_ARG = "❌ {construction} needs {name} ≥ {minimum}, got {value}."
MSG_NONCOMMUTATIVE_BASE = "❌ {construction} needs a commutative base ring; {label} is not commutative."
MSG_EMPTY_PRODUCT = "❌ A product needs at least one factor."
MSG_SIGMA_FOREIGN = "❌ σ '{name}' is not an endomorphism of {label}."
MSG_MAP_NOT_HOM = "❌ Map '{name}' is not a unital ring homomorphism: {reason}."
MSG_NOT_IDEAL = "❌ Subset of {label} is not a two-sided ideal: fails '{reason}'."
MSG_NOT_IDEMPOTENT = "❌ {element} is not an idempotent of {label}."
MSG_NOT_CLOSED = "❌ {label} is not closed: {op} leaves the member set."
MSG_FAMILY_EVEN = "❌ B({label}, n) needs an even n ≥ 4, got {n}."
MSG_FAMILY_TOO_LARGE = "❌ Family {family} filters an ambient ring of order {order}; the limit is {limit}."
MSG_BIMODULE_AXIOM = "❌ Bimodule '{name}' fails {law} at {triple}."
MSG_BIMODULE_SHAPE = "❌ Bimodule '{name}' action table has shape {shape}, expected {expected}."
MSG_BIMODULE_MISMATCH = "❌ Bimodule '{name}' acts on {found}, expected {expected}."
MSG_NOT_CYCLIC = "❌ Canonical bimodule needs {label} to be additively generated by 1."
MSG_SWAP_SHAPE = "❌ swap needs a square product R×R, got {label}."
MSG_FROBENIUS = "❌ frobenius needs a commutative ring of prime characteristic; {label} does not qualify."

# =====================================================================================
# ====== LOOKUP / PARSE ERRORS ======
# =====================================================================================

MSG_UNKNOWN_LABEL = "❌ No element labelled '{element}' in {label}."
MSG_LABEL_LIMIT = "❌ {label} is too large to index element labels (limit {limit})."
MSG_UNKNOWN_SIGMA = "❌ Unknown σ '{name}'."
MSG_UNKNOWN_BIMODULE = "❌ Unknown bimodule '{name}'."
MSG_UNKNOWN_CONSTRUCTOR = "❌ Unknown constructor '{name}'."
MSG_PARSE_ERROR = "❌ Parse error at offset {position}: {detail} (expected {expected})."
MSG_ARITY = "❌ {name} takes {expected} argument(s), got {got}."
MSG_ARGUMENT_KIND = "❌ Argument {index} of {name} must be {kind}."
MSG_REGISTRY_LOAD = "❌ Could not load registry file {path}: {error}"

# =====================================================================================
# ====== BUDGET ======
# =====================================================================================

MSG_BUDGET_PAIRWISE = "⛔ {label}: a pairwise scan over order {order} exceeds the budget {budget}."
MSG_BUDGET_SEARCH = "⛔ Zero-pair search over {label} up to degree {dmax} needs ~{estimate} steps, budget {budget}."
MSG_BUDGET_TABLES = "⛔ Zero-pair search over {label} needs Cayley tables; order {order} exceeds the materialization cap {cap}."

# =====================================================================================
# ====== CONSISTENCY ======
# =====================================================================================

MSG_AXIOM_FAILED = "💥 Ring axioms fail for {label}: {failure}"
MSG_RADICAL_NOT_IDEAL = "💥 Computed Jacobson radical of {label} is not an ideal ({reason})."
MSG_WITNESS_INVALID = "💥 Witness {witness} for {name} = {poly} does not satisfy the {family} condition."
MSG_COUNTEREXAMPLE_INVALID = "💥 Counterexample over {label} failed re-verification: {reason}."
MSG_AUDIT_CONTAINMENT = "💥 {smaller} witnesses are not contained in {larger} witnesses for f = {poly} over {label}."
MSG_AUDIT_SEMISIMPLE = "💥 {label} is J-semisimple but J and McCoy witness sets differ for f = {poly}."

# =====================================================================================
# ====== POLYNOMIALS ======
# =====================================================================================

MSG_RING_MISMATCH = "❌ Polynomials live over different rings: {left} vs {right}."
MSG_ZERO_POLY = "❌ Witness search needs a nonzero polynomial."
MSG_PACK_DEGREE = "❌ Packing needs k > every degree; k = {k}, max degree = {degree}."
MSG_PROPERTY_UNKNOWN = "❌ Unknown property '{name}'; choose mccoy, nc-mccoy or j-mccoy."

# =====================================================================================
# ====== SUITE ======
# =====================================================================================

MSG_SKIP_INFINITE = "infinite ring, out of scope for finite enumeration"
MSG_SKIP_TRUNCATION = "truncation makes tF[t] nilpotent, so the non-NC-McCoy half cannot be reproduced"
MSG_SKIP_NOT_IN_J = "ideal is not contained in the Jacobson radical"
MSG_SKIP_NOT_LOCAL = "ring is not local"
MSG_SKIP_NOT_ABELIAN = "ring is not abelian; the converse is not claimed"
MSG_SKIP_FULL_CORNER = "e = 1, so eRe is R itself"
MSG_SKIP_BUDGET = "refused by budget: {reason}"
MSG_SKIP_INCONCLUSIVE = "no counterexample up to degree {dmax}; inconclusive"
MSG_VALIDATION_DONE = "{status} {name} ({elapsed})"
MSG_SUITE_DONE = "Suite finished: {passed} passed, {failed} failed, {skipped} skipped in {elapsed}."

# =====================================================================================
# ====== CLI ======
# =====================================================================================

MSG_CLI_DESCRIPTION = "Finite ring workbench: radicals and McCoy-type properties up to a degree bound."
MSG_CLI_INTERRUPTED = "Interrupted."
MSG_CLI_UNEXPECTED = "💥 Unexpected error: {error}"
MSG_HUNT_FOUND = "counterexample over {label}: f = {f}, g = {g}"
MSG_HUNT_CLEAR = "no counterexample over {label} up to degree {dmax}"
