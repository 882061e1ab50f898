"""Russian UI strings for edugraph."""

STRINGS: dict[str, str] = {
    # --- config.py (argparse) ---
    "cli.desc": "Образовательный граф знаний: траектории обучения, рекомендации, запросы",
    "cli.workspace": "Файл рабочего пространства Turtle (по умолчанию: workspace.ttl)",
    "cli.config": "Файл настроек (по умолчанию: edugraph.toml, если есть)",
    "cli.format": "Формат вывода: table, tsv или turtle",
    "cli.debug": "Дублировать лог в stderr",
    "cli.log_level": "Уровень лога (переопределяет [logging] level)",
    "cli.ingest": "Добавить файлы Turtle/RDF в рабочее пространство",
    "cli.fresh": "Начать с пустого рабочего пространства",
    "cli.files": "Входные файлы (по умолчанию: [paths] data)",
    "cli.validate": "Проверить рабочее пространство на ограничения онтологии",
    "cli.path": "Ранжировать траектории обучения к цели",
    "cli.k": "Число траекторий (по умолчанию: [requirements] max_paths)",
    "cli.strict": "Ошибка вместо ослабления правила концов",
    "cli.recommend": "Ранжировать ресурсы темы для пользователя",
    "cli.n": "Число ресурсов (по умолчанию: [profile] recommendations_per_topic)",
    "cli.query": "Выполнить файл запроса SPARQL SELECT",
    "cli.eval": "Полнота покрытия классов по файлам соответствий",
    "cli.stats": "Число триплетов, субъектов и экземпляров классов",
    "cli.rate": "Записать оценку и обновить предпочтения",
    "cli.grade": "Проверить ответы на тест и обновить освоение",
    "cli.at": "Время сдачи, например 2024-03-02T10:00:00Z (по умолчанию текущее время UTC, поэтому IRI результата и вывод меняются от запуска к запуску)",
    "cli.constructs": "Пересчитать психологические конструкты по индикаторам",
    "cli.not_an_integer": "'{value}' не целое число",
    "cli.must_be_positive": "'{value}' должно быть >= 1",
    "cli.bad_answer": "'{value}' должно иметь вид УПРАЖНЕНИЕ=ТЕКСТ",
    "cli.config_missing": "Файл настроек не найден: {path}",

    # --- edugraph.py (main) ---
    "main.config_error": "Настройки: {error}",
    "main.crashed": "edugraph аварийно завершился",
    "main.log_colon": "Лог: {path}",
    "ingest.done": "Рабочее пространство {path}: {count} триплетов",
    "ingest.no_files": "Нет входных файлов: укажите их или задайте [paths] data",
    "validate.clean": "Замечаний нет ({count} триплетов)",
    "validate.errors": "Ошибок: {errors}, предупреждений: {warnings}",
    "validate.warnings_only": "Ошибок нет, предупреждений: {warnings}",
    "path.found": "Траекторий к {goal}: {count}",
    "path.relaxed": "Ни один порядок к {goal} не соблюдает правило концов; траектории ослаблены",
    "recommend.none": "Нет доступных ресурсов для {topic}",
    "query.rows": "Строк: {count}",
    "rate.saved": "Предпочтения {user} сохранены",
    "constructs.none_defined": "В файле настроек нет таблиц [constructs.*]",
    "stats.triples": "триплеты",
    "stats.subjects": "субъекты",

    # --- table columns ---
    "col.workspace": "пространство",
    "col.triples": "триплеты",
    "col.severity": "уровень",
    "col.code": "код",
    "col.subject": "субъект",
    "col.message": "сообщение",
    "col.path": "траектория",
    "col.weight": "вес",
    "col.step": "шаг",
    "col.topic": "тема",
    "col.resource": "ресурс",
    "col.score": "оценка",
    "col.rank": "место",
    "col.rationale": "обоснование",
    "col.schema": "схема",
    "col.recall": "полнота",
    "col.item": "элемент",
    "col.count": "количество",
    "col.media": "медиа",
    "col.before": "было",
    "col.after": "стало",
    "col.result": "результат",
    "col.timestamp": "время",
    "col.attempt": "попытка",
    "col.construct": "конструкт",
    "col.value": "значение",

    # --- validate.py diagnostics ---
    "diag.E_DOMAIN": "{prop} использовано на узле, который не является: {types}",
    "diag.E_RANGE": "значение {value} свойства {prop} не входит в: {expected}",
    "diag.E_DATATYPE": "значение {value} свойства {prop} не является допустимым {expected}",
    "diag.E_MISSING_FIELD": "у {cls} нет допустимого значения обязательного поля '{field}'",
    "diag.E_CARDINALITY": "у {prop} должно быть ровно одно значение",
    "diag.E_TEST_EMPTY": "в тесте нет упражнений",
    "diag.E_PATH_EMPTY": "в траектории нет тем",
    "diag.E_PATH_DUPLICATE": "тема {topic} встречается в траектории более одного раза",
    "diag.E_GOAL_NO_TOPICS": "навык-цель не требует ни одной темы",
    "diag.E_PREREQ_CYCLE": "{topic} входит в цикл предпосылок",
    "diag.E_ORDINAL_RANGE": "значение {value} свойства {prop} вне 1..5",
    "diag.E_UNIT_RANGE": "значение {value} свойства {prop} вне [0, 1]",
    "diag.E_NEGATIVE": "значение {value} свойства {prop} отрицательно",
    "diag.E_TIMESTAMP_DUP": "время {timestamp} уже занято для этого пользователя и теста",
    "diag.E_STATIC_DUP": "статический индикатор {indicator} записан более одного раза",
    "diag.E_INDICATOR_TIME": "у динамического индикатора нет времени наблюдения",
    "diag.E_PATH_LEVEL": "домен {domain} начинается с уровня {first} и заканчивается уровнем {last}",
    "diag.E_PATH_PREREQ": "{topic} стоит раньше своей предпосылки {prereq}",
    "diag.W_PATH_NONMONOTONE": "уровни в домене {domain} не монотонны: {levels}",
    "diag.W_UNKNOWN_PROPERTY": "{prop} не является свойством онтологии",
    "diag.W_UNKNOWN_CLASS": "{cls} не является классом онтологии",
}
