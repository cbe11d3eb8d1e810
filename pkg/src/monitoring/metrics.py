from prometheus_client import Counter, Histogram

# Conversion Metrics
conversions_total = Counter(
    "stabtool_conversions_total",
    "Total number of document conversions",
    ["source", "target", "status"]
)

# Verification Metrics
verifications_total = Counter(
    "stabtool_verifications_total",
    "Total number of verifications by input kind and verdict",
    ["kind", "verdict"]
)

oracle_disagreements_total = Counter(
    "stabtool_oracle_disagreements_total",
    "Fast-path verdicts contradicted by the brute-force oracle",
    ["kind"]
)

operation_duration_seconds = Histogram(
    "stabtool_operation_duration_seconds",
    "Wall time of library operations invoked by the command-line tool",
    ["operation"],
    buckets=(0.0001, 0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0)
)
