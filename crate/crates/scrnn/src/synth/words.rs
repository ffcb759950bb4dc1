//! Word inventory for the synthetic corpus generator.
//!
//! Lists are rank-ordered: earlier entries are sampled more often. The heads
//! of the noun/verb/adjective lists carry the words the demo passage needs
//! plus dense anagram families (same letters, different order) so the encoder
//! ablations have something to confuse.

pub const NOUNS: &[&str] = &[
    // passage vocabulary and anagram families first
    "word", "letter", "order", "place", "problem", "thing", "mind", "researcher", "research",
    "university", "mess", "rest", "reader", "study", "time", "item", "team", "meat", "mate",
    "stop", "post", "spot", "form", "night", "heart", "earth", "state", "taste", "seat", "east",
    "star", "part", "trap", "strap", "note", "stone", "tone", "onset", "horse", "shore", "sword",
    "trail", "trial", "board", "fare", "fear", "view", "host", "shot", "creditor", "director",
    "diary", "dairy", "tale", "slate", "elbow", "market", "report", "company", "price", "share",
    "result", "growth", "quarter", "investor", "trader", "analyst", "bank", "fund", "stock",
    "index", "profit", "loss", "sale", "deal", "plan", "group", "firm", "unit", "product",
    "service", "system", "program", "project", "office", "House", "government", "president",
    "official", "policy", "country", "city", "street", "building", "house", "home", "family",
    "child", "parent", "school", "student", "teacher", "class", "lesson", "paper", "page",
    "book", "story", "article", "sentence", "question", "answer", "idea", "reason", "purpose",
    "effect", "cause", "change", "moment", "morning", "evening", "afternoon", "week", "month",
    "year", "season", "spring", "summer", "winter", "autumn", "history", "future", "past",
    "present", "people", "person", "woman", "man", "friend", "neighbor", "visitor", "crowd",
    "member", "leader", "dealer", "worker", "manager", "owner", "player", "runner", "winner",
    "writer", "speaker", "listener", "painter", "builder", "driver", "farmer", "doctor",
    "lawyer", "banker", "editor", "agent", "expert", "critic", "judge", "jury", "witness",
    "water", "river", "ocean", "lake", "mountain", "valley", "forest", "field", "garden",
    "flower", "tree", "grass", "stone", "rock", "sand", "cloud", "storm", "wind", "rain",
    "snow", "light", "shadow", "color", "sound", "noise", "voice", "music", "song", "dance",
    "picture", "image", "camera", "screen", "window", "door", "floor", "wall", "roof", "room",
    "kitchen", "table", "chair", "desk", "shelf", "drawer", "basket", "bottle", "glass",
    "plate", "knife", "spoon", "bread", "butter", "cheese", "fruit", "apple", "orange",
    "grape", "lemon", "melon", "dinner", "lunch", "breakfast", "coffee", "sugar", "salt",
    "pepper", "flour", "grain", "wheat", "corn", "cotton", "copper", "silver", "metal",
    "paper", "wood", "leather", "plastic", "engine", "machine", "motor", "wheel", "train",
    "plane", "truck", "wagon", "bridge", "road", "track", "station", "airport", "harbor",
    "island", "coast", "border", "region", "area", "district", "village", "town", "nation",
    "culture", "language", "symbol", "signal", "number", "figure", "amount", "total",
    "measure", "weight", "length", "height", "degree", "level", "limit", "range", "scale",
    "square", "circle", "corner", "center", "middle", "bottom", "surface", "ground", "floor",
    "animal", "horse", "cattle", "sheep", "tiger", "lion", "eagle", "robin", "sparrow",
    "salmon", "spider", "insect", "rabbit", "turtle", "monkey", "camel", "donkey", "goat",
    "doctor", "nurse", "patient", "hospital", "medicine", "disease", "injury", "health",
    "body", "head", "face", "hand", "finger", "shoulder", "stomach", "throat", "tongue",
    "spirit", "emotion", "feeling", "thought", "memory", "dream", "belief", "truth",
    "courage", "danger", "safety", "secret", "surprise", "mistake", "error", "failure",
    "success", "victory", "defeat", "battle", "struggle", "effort", "attempt", "chance",
    "choice", "decision", "action", "motion", "movement", "journey", "travel", "visit",
    "meeting", "session", "debate", "speech", "lecture", "message", "notice", "record",
    "account", "budget", "salary", "income", "payment", "credit", "debt", "interest",
    "charge", "expense", "value", "benefit", "award", "prize", "ticket", "letter",
    "package", "parcel", "cargo", "freight", "supply", "demand", "source", "resource",
    "energy", "power", "current", "voltage", "circuit", "wire", "cable", "switch",
    "button", "handle", "hammer", "needle", "thread", "fabric", "carpet", "curtain",
    "mirror", "candle", "lantern", "bucket", "barrel", "ladder", "tunnel", "cellar",
    "castle", "palace", "temple", "church", "chapel", "tower", "cottage", "cabin",
    "branch", "office", "agency", "bureau", "council", "committee", "faculty", "staff",
    "career", "contest", "tournament", "match", "score", "goal", "target", "margin",
    "detail", "feature", "aspect", "element", "factor", "pattern", "method", "manner",
    "habit", "custom", "routine", "schedule", "calendar", "deadline", "minute", "second",
    "silence", "absence", "presence", "distance", "horizon", "climate", "weather",
    "harvest", "timber", "lumber", "mineral", "diamond", "crystal", "marble",
    "anchor", "arrow", "artist", "athlete", "auction", "author", "avenue", "bargain",
    "barrier", "beacon", "bicycle", "blanket", "blossom", "boulder", "breeze", "brick",
    "cabinet", "canal", "canvas", "captain", "carriage", "ceiling", "chamber", "channel",
    "chapter", "chart", "chimney", "closet", "colony", "column", "comfort", "compass",
    "concert", "contract", "costume", "cousin", "cradle", "crater", "creature", "crew",
    "crisis", "crown", "culprit", "current", "cushion", "cycle", "decade", "delay",
    "desert", "device", "dispute", "dock", "dragon", "drama", "economy", "edge",
    "emblem", "empire", "engineer", "entrance", "envelope", "episode", "estate",
    "exhibit", "fabric", "factory", "fashion", "feast", "fence", "ferry", "festival",
    "fiber", "fortune", "fountain", "frame", "furnace", "galaxy", "gallery", "gesture",
    "glacier", "glance", "granite", "gravel", "grove", "guard", "guest", "guide",
    "habitat", "hallway", "hazard", "helmet", "herald", "hollow", "honor", "hotel",
    "hunter", "impact", "incident", "instinct", "instrument", "invoice", "jacket",
    "jewel", "journal", "journey", "jungle", "keeper", "kingdom", "ladder", "landing",
    "lantern", "layer", "legend", "lobby", "locker", "lodge", "lounge", "luggage",
    "machine", "magnet", "mansion", "mantle", "manual", "margin", "marsh", "mayor",
    "meadow", "merchant", "meter", "midnight", "miracle", "mission", "mixture",
    "moment", "monarch", "monument", "mosaic", "motive", "museum", "native", "nectar",
    "network", "novel", "oasis", "object", "opinion", "opera", "orbit", "orchard",
    "organ", "outcome", "outfit", "oven", "owner", "packet", "palace", "panel",
    "parade", "parcel", "partner", "passage", "patent", "patrol", "pattern", "pearl",
    "pebble", "pension", "permit", "phase", "phrase", "pillar", "pillow", "pilot",
    "pioneer", "pitch", "planet", "plateau", "platform", "plaza", "pocket", "poem",
    "poet", "porch", "portal", "portrait", "poster", "pottery", "prairie", "premise",
    "priest", "prince", "printer", "prison", "profile", "prophet", "puzzle", "quarry",
    "quest", "quota", "ranch", "ransom", "ration", "ravine", "realm", "rebel",
    "recipe", "reef", "refuge", "relic", "remedy", "reptile", "rescue", "reserve",
    "resident", "retreat", "ribbon", "riddle", "ridge", "rifle", "ritual", "rival",
    "robot", "rocket", "rubble", "rumor", "saddle", "sailor", "sanctuary", "satchel",
    "scandal", "scheme", "scholar", "sculptor", "sector", "sermon", "shelter", "shield",
    "shrine", "signal", "skeleton", "slogan", "soldier", "sonnet", "specimen",
    "spectrum", "sphere", "stable", "stadium", "statue", "steeple", "steward",
    "summit", "surgeon", "survey", "tactic", "talent", "tavern", "tenant", "terrace",
    "texture", "theater", "theme", "theory", "tissue", "token", "topic", "torch",
    "trade", "treasure", "treaty", "tremor", "trench", "tribute", "triumph", "trophy",
    "trumpet", "tutor", "uniform", "vault", "vendor", "venture", "verdict", "vessel",
    "veteran", "victim", "vigil", "vineyard", "volcano", "voyage", "wallet", "wanderer",
    "warden", "warehouse", "warrior", "weapon", "whisper", "widow", "willow", "wizard",
];

pub const VERBS: &[&str] = &[
    // regular verbs; heads include passage verbs and anagram members
    "matter", "read", "solve", "ask", "jumble", "notice", "train", "test", "time", "post",
    "stop", "form", "state", "taste", "seat", "star", "trap", "note", "host", "view", "fare",
    "trail", "board", "dare", "heat", "hate", "care", "race", "edit", "emit", "veil", "steal",
    "close", "open", "move", "show", "need", "want", "work", "play", "turn", "follow",
    "change", "start", "help", "talk", "offer", "expect", "raise", "lower", "report",
    "watch", "cover", "reach", "deliver", "answer", "explain", "walk", "wait", "stay",
    "remain", "appear", "listen", "learn", "check", "fill", "sign", "visit", "travel",
    "return", "carry", "copy", "manage", "measure", "mention", "happen", "live", "love",
    "like", "hope", "wish", "plan", "call", "name", "claim", "argue", "agree", "decide",
    "refuse", "accept", "reject", "approve", "deny", "admit", "declare", "announce",
    "promise", "suggest", "propose", "request", "demand", "require", "order", "allow",
    "permit", "prevent", "avoid", "escape", "chase", "hunt", "search", "discover",
    "observe", "record", "describe", "compare", "contrast", "consider", "believe",
    "remember", "forget", "imagine", "wonder", "realize", "recognize", "judge", "blame",
    "praise", "thank", "welcome", "greet", "invite", "join", "gather", "collect",
    "arrange", "prepare", "finish", "complete", "continue", "repeat", "practice",
    "improve", "increase", "reduce", "expand", "extend", "shrink", "stretch", "press",
    "pull", "push", "lift", "drop", "place", "attach", "remove", "replace", "repair",
    "damage", "destroy", "create", "produce", "design", "construct", "paint", "clean",
    "wash", "cook", "serve", "pour", "mix", "stir", "bake", "roast", "slice", "peel",
    "absorb", "achieve", "adjust", "adopt", "advise", "assist", "assume", "attract",
    "borrow", "bounce", "brush", "burst", "capture", "cause", "cease", "celebrate",
    "charge", "climb", "combine", "confirm", "connect", "convert", "convince", "crawl",
    "cross", "crush", "defend", "define", "depend", "deserve", "detect", "develop",
    "disturb", "divide", "drain", "dwell", "earn", "echo", "embrace", "employ",
    "enjoy", "enter", "erase", "examine", "exist", "fold", "gain", "glow", "grasp",
    "greet", "guard", "guess", "handle", "harvest", "haunt", "heal", "ignore",
    "inform", "inspect", "insist", "install", "invent", "invest", "launch", "lean",
    "lock", "march", "melt", "merge", "object", "obtain", "occur", "paddle", "pause",
    "perform", "polish", "predict", "preserve", "protest", "punish", "pursue",
    "recall", "receive", "reflect", "refresh", "rely", "rent", "rescue", "resist",
    "resolve", "restore", "reveal", "review", "roam", "scatter", "scream", "seal",
    "settle", "shelter", "shout", "soak", "spill", "sprint", "squeeze", "stack",
    "storm", "stumble", "submit", "surround", "survive", "trust", "unfold", "vanish",
    "wander", "warn", "whisper", "witness", "wrap", "yield",
];

pub const ADJECTIVES: &[&str] = &[
    // passage adjectives and confusable heads first
    "important", "right", "total", "human", "whole", "first", "last", "only", "quiet",
    "quite", "broad", "lost", "left", "felt", "tied", "evil", "live", "vile", "least",
    "steady", "strong", "weak", "early", "late", "recent", "current", "former", "final",
    "major", "minor", "higher", "lower", "large", "small", "great", "little", "young",
    "fresh", "clean", "dirty", "heavy", "light", "thick", "thin", "wide", "narrow",
    "deep", "shallow", "long", "short", "quick", "rapid", "slow", "steep", "smooth",
    "rough", "sharp", "blunt", "bright", "dark", "pale", "clear", "cloudy", "warm",
    "cold", "cool", "fierce", "gentle", "calm", "nervous", "anxious", "eager", "proud",
    "humble", "honest", "loyal", "brave", "timid", "clever", "foolish", "wise", "simple",
    "complex", "plain", "fancy", "modern", "ancient", "common", "rare", "usual",
    "strange", "normal", "special", "general", "local", "national", "foreign", "global",
    "public", "private", "social", "personal", "official", "formal", "casual", "serious",
    "funny", "happy", "angry", "tired", "busy", "ready", "empty", "full", "open",
    "closed", "free", "cheap", "costly", "rich", "poor", "safe", "dangerous", "healthy",
    "solid", "liquid", "frozen", "golden", "wooden", "woolen", "silent", "noisy",
    "famous", "popular", "careful", "careless", "useful", "useless", "helpful",
    "harmful", "painful", "peaceful", "powerful", "grateful", "cheerful", "hopeful",
    "possible", "probable", "certain", "likely", "exact", "precise", "rough", "loose",
    "tight", "firm", "stable", "fragile", "sturdy", "hollow", "dense", "sparse",
    "absent", "active", "alert", "alive", "awake", "aware", "bitter", "bold", "brief",
    "brisk", "crisp", "cruel", "curious", "decent", "distant", "dusty", "eager",
    "earnest", "elegant", "faint", "faithful", "fertile", "flat", "fond", "frank",
    "frequent", "frosty", "gloomy", "graceful", "grand", "grim", "hasty", "hazy",
    "hostile", "humid", "idle", "immense", "innocent", "keen", "lively", "lonely",
    "mellow", "mild", "misty", "modest", "muddy", "mutual", "naive", "neat", "noble",
    "obscure", "patient", "polite", "prompt", "remote", "rigid", "robust", "rusty",
    "sacred", "savage", "scarce", "secure", "severe", "shiny", "sincere", "slender",
    "sober", "solemn", "splendid", "stale", "stern", "sticky", "subtle", "superb",
    "supreme", "swift", "tender", "tense", "tidy", "tranquil", "vague", "vast",
    "vivid", "weary", "wicked", "witty",
];

pub const ADVERBS: &[&str] = &[
    "still", "once", "again", "often", "always", "never", "sometimes", "usually",
    "rarely", "seldom", "soon", "later", "early", "today", "yesterday", "tomorrow",
    "here", "there", "everywhere", "nowhere", "quickly", "slowly", "quietly", "loudly",
    "carefully", "easily", "hardly", "nearly", "almost", "really", "truly", "certainly",
    "probably", "perhaps", "maybe", "together", "apart", "forward", "backward", "ahead",
    "behind", "inside", "outside", "abroad", "anyway",
];

pub const NAMES: &[&str] = &[
    "Cambridge", "University", "Once", "London", "Boston", "Chicago", "Tokyo", "Paris",
    "Berlin", "Madrid", "Oxford", "Harvard", "Stanford", "Princeton", "Europe", "America",
    "Asia", "Africa", "England", "France", "Germany", "Spain", "Italy", "Japan", "China",
    "Canada", "Mexico", "Brazil", "India", "Russia", "Smith", "Johnson", "Williams",
    "Brown", "Jones", "Miller", "Davis", "Garcia", "Wilson", "Anderson", "Thomas",
    "Taylor", "Moore", "Jackson", "Martin", "Thompson", "White", "Harris", "Clark",
    "Lewis", "Robinson", "Walker", "Young", "Allen", "King", "Wright", "Scott", "Green",
    "Baker", "Adams", "Nelson", "Hill", "Campbell", "Mitchell", "Roberts", "Carter",
    "Phillips", "Evans", "Turner", "Parker",
];

pub const NUMBERS: &[&str] = &[
    "1980s", "1987", "1990", "2000", "1985", "1979", "10", "20", "30", "50", "100",
    "200", "500", "1,000", "2,500", "10,000", "15", "25", "40", "75", "12", "18",
    "1988", "1992", "1995", "1960s", "1970s", "3.5", "7.2", "0.5",
];
