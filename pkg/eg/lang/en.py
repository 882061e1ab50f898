"""English UI strings for edugraph."""

STRINGS: dict[str, str] = {
    # --- config.py (argparse) ---
    "cli.desc": "Educational knowledge graph: learning paths, recommendations, queries",
    "cli.workspace": "Workspace Turtle file (default: workspace.ttl)",
    "cli.config": "Config file (default: edugraph.toml if present)",
    "cli.format": "Output format: table, tsv or turtle",
    "cli.debug": "Mirror the log to stderr",
    "cli.log_level": "Log file level (overrides [logging] level)",
    "cli.ingest": "Merge Turtle/RDF files into the workspace",
    "cli.fresh": "Start from an empty workspace instead of merging",
    "cli.files": "Input files (default: [paths] data)",
    "cli.validate": "Check the workspace against the ontology constraints",
    "cli.path": "Rank learning paths towards a goal",
    "cli.k": "Number of paths (default: [requirements] max_paths)",
    "cli.strict": "Fail instead of relaxing the endpoint rule",
    "cli.recommend": "Rank resources of a topic for a user",
    "cli.n": "Number of resources (default: [profile] recommendations_per_topic)",
    "cli.query": "Run a SPARQL SELECT query file",
    "cli.eval": "Recall of class coverage from mapping files",
    "cli.stats": "Triple, subject and per-class counts",
    "cli.rate": "Record a rating and update media preferences",
    "cli.grade": "Grade a test submission and update mastery",
    "cli.at": "Submission timestamp, e.g. 2024-03-02T10:00:00Z (default: current UTC time, so the result IRI and output differ between runs)",
    "cli.constructs": "Recompute psychological constructs from indicators",
    "cli.not_an_integer": "'{value}' is not an integer",
    "cli.must_be_positive": "'{value}' must be >= 1",
    "cli.bad_answer": "'{value}' must look like EXERCISE=TEXT",
    "cli.config_missing": "Config file not found: {path}",

    # --- edugraph.py (main) ---
    "main.config_error": "Config: {error}",
    "main.crashed": "edugraph crashed",
    "main.log_colon": "Log: {path}",
    "ingest.done": "Workspace {path}: {count} triples",
    "ingest.no_files": "No input files: pass some or set [paths] data",
    "validate.clean": "No diagnostics ({count} triples)",
    "validate.errors": "{errors} errors, {warnings} warnings",
    "validate.warnings_only": "No errors, {warnings} warnings",
    "path.found": "{count} path(s) to {goal}",
    "path.relaxed": "No order towards {goal} satisfies the endpoint rule; paths were relaxed",
    "recommend.none": "No accessible resources for {topic}",
    "query.rows": "{count} row(s)",
    "rate.saved": "Preferences of {user} saved",
    "constructs.none_defined": "No [constructs.*] tables in the config file",
    "stats.triples": "triples",
    "stats.subjects": "subjects",

    # --- table columns ---
    "col.workspace": "workspace",
    "col.triples": "triples",
    "col.severity": "severity",
    "col.code": "code",
    "col.subject": "subject",
    "col.message": "message",
    "col.path": "path",
    "col.weight": "weight",
    "col.step": "step",
    "col.topic": "topic",
    "col.resource": "resource",
    "col.score": "score",
    "col.rank": "rank",
    "col.rationale": "rationale",
    "col.schema": "schema",
    "col.recall": "recall",
    "col.item": "item",
    "col.count": "count",
    "col.media": "media",
    "col.before": "before",
    "col.after": "after",
    "col.result": "result",
    "col.timestamp": "timestamp",
    "col.attempt": "attempt",
    "col.construct": "construct",
    "col.value": "value",

    # --- validate.py diagnostics ---
    "diag.E_DOMAIN": "{prop} used on a node that is none of: {types}",
    "diag.E_RANGE": "{prop} value {value} is not one of: {expected}",
    "diag.E_DATATYPE": "{prop} value {value} is not a valid {expected}",
    "diag.E_MISSING_FIELD": "{cls} has no valid value for required field '{field}'",
    "diag.E_CARDINALITY": "{prop} must have exactly one value",
    "diag.E_TEST_EMPTY": "test has no exercises",
    "diag.E_PATH_EMPTY": "learning path has no topics",
    "diag.E_PATH_DUPLICATE": "topic {topic} appears more than once in the path",
    "diag.E_GOAL_NO_TOPICS": "skill used as a learning goal requires no knowledge topics",
    "diag.E_PREREQ_CYCLE": "{topic} lies on a prerequisite cycle",
    "diag.E_ORDINAL_RANGE": "{prop} value {value} is outside 1..5",
    "diag.E_UNIT_RANGE": "{prop} value {value} is outside [0, 1]",
    "diag.E_NEGATIVE": "{prop} value {value} is negative",
    "diag.E_TIMESTAMP_DUP": "timestamp {timestamp} already used for this user and test",
    "diag.E_STATIC_DUP": "static indicator {indicator} recorded more than once",
    "diag.E_INDICATOR_TIME": "dynamic indicator has no observation time",
    "diag.E_PATH_LEVEL": "domain {domain} starts at level {first} and ends at level {last}",
    "diag.E_PATH_PREREQ": "{topic} comes before its prerequisite {prereq}",
    "diag.W_PATH_NONMONOTONE": "levels in domain {domain} are not monotone: {levels}",
    "diag.W_UNKNOWN_PROPERTY": "{prop} is not an ontology property",
    "diag.W_UNKNOWN_CLASS": "{cls} is not an ontology class",
}
